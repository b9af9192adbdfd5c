"""Configuration, logging, errors and formatting helpers."""
