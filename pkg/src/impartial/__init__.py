"""Impartial digraphs - tournament-count invariance, three ways."""
