"""Decorated 2-adic trees, 2-isogeny chains and 2-power division towers.

Exact computations for y^2 = (x - alpha_1)(x - alpha_2)(x - alpha_3):
the rooted 3-regular tree of cyclic 2-power subgroups, its decoration by
recursively defined field elements, the chain of 2-isogenies realizing
each subgroup as a kernel, and the fields cut out by torsion points.
"""

__version__ = "0.1.0"
