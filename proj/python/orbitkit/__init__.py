"""Coadjoint-orbit analysis of nilpotent Lie groups with diagonal dilations."""

from _orbitkit import Session, SpecParseError, parse

__all__ = ["Session", "SpecParseError", "parse", "load"]


def load(path):
    """Parse a spec file from disk and return a Session."""
    with open(path, "r", encoding="utf-8") as f:
        return parse(f.read())
