"""Warmth-competence analysis for word embeddings.

Thin Python layer over the C++ core: polar axis construction from seed
lexicons, plane projection, lexicon validation, stereotype clustering,
anti-stereotype strategy classification, and counter-stereotype generation.
"""

try:
    from ._scmpolar import *  # noqa: F401,F403  (installed package layout)
    from ._scmpolar import __version__  # noqa: F401
except ImportError:  # development layout: extension directory on sys.path
    from _scmpolar import *  # noqa: F401,F403
    from _scmpolar import __version__  # noqa: F401
