"""Logging, progress and run manifests."""
