"""
Tests for the Research Digest Toolkit.
"""
