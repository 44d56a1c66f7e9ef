"""
graphnorm - graph-norm calculus for extensions and restrictions of closed operators.
"""

__version__ = "0.1.0"
