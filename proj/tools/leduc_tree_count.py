#!/usr/bin/env python3
# Copyright 2026 The Quantal Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Counts the nodes and information sets of Leduc hold'em.

Rules: six cards (J, Q, K in two suits), ante 1 each, a private card each,
then a betting round, a public card and a second betting round. Raises are 2
in the first round and 4 in the second, at most two per round. Every card
deal is its own chance node. Information sets see ranks only.

Usage: tools/leduc_tree_count.py
"""



def betting(history, raises, to_act, facing, moves):
    """Yields (history, outcome) for every continuation of one round.

    outcome is 'node' for decisions, 'fold' or 'done' for ends of the round.
    """
    yield history, "node", to_act
    if facing:
        yield history + "f", "fold", to_act
    if facing or moves >= 1:
        yield history + ("c" if facing else "k"), "done", to_act
    else:
        yield from betting(history + "k", raises, 1 - to_act, False, moves + 1)
    if raises < 2:
        yield from betting(history + "r", raises + 1, 1 - to_act, True, moves + 1)


def count():
    nodes = 0
    infosets = [set(), set()]
    rank = lambda c: c // 2
    nodes += 1  # first deal
    for lc in range(6):
        nodes += 1  # second deal
        for fc in range(6):
            if fc == lc:
                continue
            for h1, kind1, p1 in betting("", 0, 0, False, 0):
                nodes += 1
                if kind1 == "node":
                    infosets[p1].add((rank((lc, fc)[p1]), h1))
                if kind1 != "done":
                    continue
                # The "done" node is the public-card chance node.
                for pub in range(6):
                    if pub in (lc, fc):
                        continue
                    for h2, kind2, p2 in betting("", 0, 0, False, 0):
                        nodes += 1
                        if kind2 == "node":
                            infosets[p2].add(
                                (rank((lc, fc)[p2]), rank(pub), h1, h2))
    return nodes, len(infosets[0]), len(infosets[1])


if __name__ == "__main__":
    n, i0, i1 = count()
    print(f"nodes {n} leader_infosets {i0} follower_infosets {i1}")
