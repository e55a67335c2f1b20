"""Cross-process determinism: seeded runs replay bit-exactly regardless of
the interpreter's hash randomization."""

import subprocess
import sys

PROBE = r"""
import json, hashlib
from ordersize import (build_H, build_gr, cyclic_triangle_3graph,
                       main_structure, max_homogeneous, size_spectrum,
                       step_to_pairs)
from ordersize.blowups import build_pair_family
from ordersize.rng import SeededRNG

out = []
h = cyclic_triangle_3graph(11, 9)
out.append(size_spectrum(h, 6).to_json_obj())
out.append(size_spectrum(h, 6, mode="sampled", samples=300, seed=5).to_json_obj())
w = max_homogeneous(h)
out.append([w.kind, list(w.set)])
out.append(step_to_pairs(h, 1, 4).to_json_obj())
out.append(build_H(4, 80, 424242).to_json_obj())
hb, _, _ = build_pair_family(3, 3, 1, 1, 1, 0, (0, 1, 0, 0, 1, 0))
out.append(main_structure(hb, 2).structure.to_json_obj())
out.append(sorted(map(list, build_gr(20, 4, 12).graph.edges)))
rng = SeededRNG(1)
out.append([rng.sample(50, 10), rng.randint(0, 10**9), rng.bits(64)])
print(hashlib.sha256(json.dumps(out, sort_keys=True).encode()).hexdigest())
"""


def test_replay_across_hash_seeds():
    digests = set()
    for hash_seed in ("0", "7"):
        proc = subprocess.run(
            [sys.executable, "-c", PROBE],
            capture_output=True,
            text=True,
            env={"PYTHONHASHSEED": hash_seed, "PATH": "/usr/bin:/bin"},
        )
        assert proc.returncode == 0, proc.stderr
        digests.add(proc.stdout.strip())
    assert len(digests) == 1
