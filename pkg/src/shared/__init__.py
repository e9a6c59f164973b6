"""Shared defaults and environment-key constants."""

