"""Core types: scalar contexts, schemas, settings and errors."""
