"""
parryword - special factors of fixed points of canonical substitutions
associated with Parry numbers
"""

__version__ = '1.0.0'
