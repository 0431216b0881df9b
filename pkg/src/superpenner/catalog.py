"""A small catalog of trivalent fatgraphs used by tests and CLI demos.

Each constructor returns a fresh FatGraph; (genus, punctures) in the name.
The torus and theta graphs have no generic flips (their quadrilateral
labels coincide in pairs); the remaining three admit generic flips on
every edge and contain no loops.
"""

from __future__ import annotations

from .fatgraph import FatGraph


def punctured_torus():
    """Genus 1, one puncture: two vertices joined by three parallel edges."""
    return FatGraph([(0, 2, 4), (1, 3, 5)],
                    [(0, 1), (2, 3), (4, 5)],
                    vertex_names=("A", "B"))


def theta_graph():
    """Genus 0, three punctures: the theta graph."""
    return FatGraph([(0, 2, 4), (1, 5, 3)],
                    [(0, 1), (2, 3), (4, 5)],
                    vertex_names=("A", "B"))


def four_punctured_sphere():
    """Genus 0, four punctures: planar K4 (outer triangle plus a center)."""
    return FatGraph([(0, 4, 2), (11, 1, 6), (7, 3, 8), (9, 5, 10)],
                    [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11)])


def genus1_two_punctures():
    """Genus 1, two punctures; loop-free, every edge flips generically."""
    return FatGraph([(0, 1, 2), (3, 4, 5), (6, 7, 8), (9, 10, 11)],
                    [(7, 11), (3, 10), (8, 4), (9, 1), (0, 6), (2, 5)])


def genus2_one_puncture():
    """Genus 2, one puncture; loop-free, every edge flips generically."""
    return FatGraph([(0, 1, 2), (3, 4, 5), (6, 7, 8),
                     (9, 10, 11), (12, 13, 14), (15, 16, 17)],
                    [(11, 1), (7, 5), (2, 8), (6, 9), (10, 12),
                     (17, 0), (14, 3), (15, 13), (4, 16)])


def five_punctured_sphere():
    """Genus 0, five punctures; loop-free, every edge flips generically."""
    return FatGraph([(0, 1, 2), (3, 4, 5), (6, 7, 8),
                     (9, 10, 11), (12, 13, 14), (15, 16, 17)],
                    [(13, 7), (9, 3), (0, 5), (10, 14), (8, 1),
                     (6, 17), (15, 4), (12, 2), (16, 11)])


GRAPHS = {
    "torus_1_1": punctured_torus,
    "theta_0_3": theta_graph,
    "sphere_0_4": four_punctured_sphere,
    "genus1_1_2": genus1_two_punctures,
    "genus2_2_1": genus2_one_puncture,
    "sphere_0_5": five_punctured_sphere,
}
