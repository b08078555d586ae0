"""Exact verification toolkit for weakly coisotropic subvarieties, graded sl2
modules, symmetric pairs and a nilpotent-commuting-variety lemma."""

__version__ = "0.1.0"
