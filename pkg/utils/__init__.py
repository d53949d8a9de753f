"""Scripts utilitaires : génération d'éventails aléatoires."""

from .generate_corpus import product_of_lines, projective_plane, random_fan, subfan

__all__ = ['product_of_lines', 'projective_plane', 'random_fan', 'subfan']
