"""
Ground merging and the misere reduction
"""

from .transform import merge_ground, to_misere_instance

__all__ = ['merge_ground', 'to_misere_instance']
