"""Instances whose serializations are pinned byte-for-byte under tests/golden/.

Run this module directly to (re)record the files after an intentional format change.
"""
import os

from tempres.generators import (random_3dm, random_periodic_tree, random_subdivided_star,
                                random_temporal_path)
from tempres.io import serialize_instance
from tempres.reductions import ThreeDMInstance, reduce_3dm_to_substar

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")

CASES = {
    "path_n5_l3_s7.txt": lambda: random_temporal_path(5, 3, 7)[0],
    "substar_d4_b3_s11.txt": lambda: random_subdivided_star(4, 3, 11)[0],
    "substar_periodic_d3_b2_p3_s5.txt": lambda: random_subdivided_star(3, 2, 5, period=3)[0],
    "periodic_tree_n9_p3_s4.txt": lambda: random_periodic_tree(9, 3, 4),
    "3dm_p2_s4_n6_s3.txt": lambda: random_3dm(2, 4, 6, 3),
    "reduced_substar_single_triple.txt":
        lambda: reduce_3dm_to_substar(ThreeDMInstance(5, 1, ((1, 3, 5),), 0))[0],
}


def golden_text(name):
    return serialize_instance(CASES[name]())


if __name__ == "__main__":
    for name in CASES:
        with open(os.path.join(GOLDEN_DIR, name), "w", encoding="utf-8", newline="\n") as f:
            f.write(golden_text(name))
        print("wrote", name)
