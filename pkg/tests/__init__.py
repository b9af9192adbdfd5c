"""Test suite for racopt."""
