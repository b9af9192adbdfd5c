"""Strategy files and report serialization."""
