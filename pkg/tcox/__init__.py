"""
tcox: Cox rings of varieties with a complexity-one torus action.

Computes generators, class-group degrees and trinomial relations from divisorial fans
over P^1, Orlik-Wagreich graphs of K*-surfaces, and Klyachko filtration data of
rank-2 equivariant bundles over toric varieties.

"""

# Do not zero-pad month or day:
__version__ = '2026.10.16'  # remember to also update setup.py
