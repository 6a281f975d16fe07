"""

Complexity-one torus actions: polyhedral divisors over P^1, their Cox rings and the
Orlik-Wagreich and Klyachko routes to the same presentations.

"""
