"""Tests for Graph Dirac."""
