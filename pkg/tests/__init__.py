"""Unit tests for the Steklov eigenvalue workbench."""
