"""minorforge - societies, walls, certificates and K6 minors.

Exact searches that return witnesses, and verifiers that check them.
"""
