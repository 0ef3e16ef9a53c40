# ABOUTME: Test package for drama_graphs.
# ABOUTME: Shared fixtures live in conftest.py, TEI builders in builders.py.
