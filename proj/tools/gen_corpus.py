#!/usr/bin/env python3
# Copyright 2026 The gmine Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the bundled small graph corpus (static and temporal) to data/corpus."""

import argparse
import pathlib
import random

import networkx as nx

SEED = 20260101

LICENSE = """# Copyright 2026 The gmine Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""


def grid_holes(rng):
    g = nx.convert_node_labels_to_integers(nx.grid_2d_graph(30, 30))
    edges = list(g.edges())
    rng.shuffle(edges)
    g.remove_edges_from(edges[: len(edges) // 10])
    return g


def mesh(rng):
    g = nx.convert_node_labels_to_integers(nx.triangular_lattice_graph(16, 30))
    return g


def small_world(rng):
    return nx.connected_watts_strogatz_graph(800, 4, 0.1, seed=rng.randrange(1 << 30))


def scale_free(rng):
    return nx.barabasi_albert_graph(250, 2, seed=rng.randrange(1 << 30))


def clique_union(rng):
    g = nx.Graph()
    offset = 0
    for _ in range(40):
        size = rng.randint(3, 7)
        g.add_edges_from((offset + a, offset + b) for a in range(size) for b in range(a + 1, size))
        if offset:
            g.add_edge(offset, rng.randrange(offset))
        offset += size
    return g


FAMILIES = {
    "grid_holes": grid_holes,
    "mesh": mesh,
    "small_world": small_world,
    "scale_free": scale_free,
    "clique_union": clique_union,
}


def write_static(path, g):
    with open(path, "w") as f:
        f.write(LICENSE)
        f.write(f"# {path.stem}: n={g.number_of_nodes()} m={g.number_of_edges()}\n")
        for u, v in sorted((min(e), max(e)) for e in g.edges()):
            f.write(f"{u} {v}\n")


def write_temporal(path, rng):
    # A community that persists plus edges that flicker in and out.
    core = nx.complete_graph(6)
    periphery = nx.gnp_random_graph(40, 0.08, seed=rng.randrange(1 << 30))
    with open(path, "w") as f:
        f.write(LICENSE)
        f.write("# temporal: 6-clique present throughout, flickering periphery\n")
        for t in range(24):
            for u, v in core.edges():
                f.write(f"{u} {v} {t}\n")
            for u, v in periphery.edges():
                if rng.random() < 0.4:
                    f.write(f"{u + 6} {v + 6} {t}\n")
            f.write(f"{rng.randrange(6)} {6 + rng.randrange(40)} {t}\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "corpus"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)
    for name, make in FAMILIES.items():
        write_static(out / f"{name}.txt", make(rng))
    write_temporal(out / "temporal.txt", rng)


if __name__ == "__main__":
    main()
