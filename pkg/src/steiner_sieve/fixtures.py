"""Embedded reference data: explicit generators and the 30-block 3-(10,4,1) design.

Every fixture is also shipped as a data file; the file bytes and these
constants are identical, which the test suite asserts.
"""

from __future__ import annotations

import importlib.resources

from .designs import Design, parse_design_text
from .groups import PermGroup
from .perms import parse_group_text

AUT_A6_GROUP = """degree 10
(3,6,8,5,7,10,9,4)
(1,8,2)(3,4,5)(6,10,7)
(3,7)(4,6)(5,10)
"""

A5_GROUP = """degree 10
(2,3,5)(4,7,10)(6,9,8)
(1,2,4)(3,6,7)(5,8,10)
"""

A5_POINT_STABILIZER = """degree 10
(2,3,5)(4,7,10)(6,9,8)
(2,4)(3,10)(5,7)(6,8)
"""

A5_BLOCK_STABILIZER = """degree 10
(2,4)(3,10)(5,7)(6,8)
"""

PGL29_GROUP = """degree 10
(1,4)(2,10)(3,5)(6,7)(8,9)
(2,6,10)(3,8,5)(4,9,7)
"""

PGL29_BLOCK_STABILIZER = """degree 10
(1,6,7)(2,8,10)(3,4,9)
(1,5,7)(2,9,4)(3,10,8)
(2,10)(3,9)(4,8)(5,7)
"""

AUT_A6_BLOCK_STABILIZER = """degree 10
(1,5)(2,4)(3,8)
(1,6,5)(2,9,4,3,10,8)
(2,8)(3,4)(6,7)
"""

S8_GROUP = """degree 8
(1,2)
(2,3,4,5,6,7,8)
"""

A8_GROUP = """degree 8
(1,2,3)
(2,3,4,5,6,7,8)
"""

D_3_10_4 = """10 4
1 2 3 7
1 2 4 5
1 2 6 10
1 2 8 9
1 3 4 10
1 3 5 8
1 3 6 9
1 4 6 8
1 4 7 9
1 5 6 7
1 5 9 10
1 7 8 10
2 3 4 8
2 3 5 6
2 3 9 10
2 4 6 9
2 4 7 10
2 5 7 9
2 5 8 10
2 6 7 8
3 4 5 9
3 4 6 7
3 5 7 10
3 6 8 10
3 7 8 9
4 5 6 10
4 5 7 8
4 8 9 10
5 6 8 9
6 7 9 10
"""

_FILES = {
    "aut_a6.txt": AUT_A6_GROUP,
    "a5.txt": A5_GROUP,
    "a5_point_stabilizer.txt": A5_POINT_STABILIZER,
    "a5_block_stabilizer.txt": A5_BLOCK_STABILIZER,
    "pgl29.txt": PGL29_GROUP,
    "pgl29_block_stabilizer.txt": PGL29_BLOCK_STABILIZER,
    "aut_a6_block_stabilizer.txt": AUT_A6_BLOCK_STABILIZER,
    "s8.txt": S8_GROUP,
    "a8.txt": A8_GROUP,
    "d3_10_4.txt": D_3_10_4,
}


def embedded_files() -> dict[str, str]:
    return dict(_FILES)


def data_file_text(name: str) -> str:
    return importlib.resources.files("steiner_sieve.data").joinpath(name).read_text()


def group_fixture(text: str) -> PermGroup:
    degree, gens = parse_group_text(text)
    return PermGroup(degree, gens)


def design_fixture() -> Design:
    return parse_design_text(D_3_10_4)
