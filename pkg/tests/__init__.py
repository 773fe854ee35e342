"""
Tests for g2crystal.
"""
