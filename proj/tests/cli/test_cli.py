"""End-to-end checks of the hyperfactor binary: exit codes, exact outputs,
determinism, and JSON schema conformance.

Usage: test_cli.py <path-to-hyperfactor> <schemas-dir>
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

BINARY = None
SCHEMAS = None

K2 = "hypergraph 2 1\ne 0 1\n"
P3 = "hypergraph 3 2\ne 0 1\ne 1 2\n"
C4 = "hypergraph 4 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n"
K4 = "hypergraph 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n"
T3 = "hypergraph 3 1\ne 0 1 2\n"
T3_PRIME = "hypergraph 5 3\ne 0 1 2\ne 1 3\ne 2 4\n"
DISCONNECTED = "hypergraph 4 2\ne 0 1\ne 2 3\n"


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("HYPERFACTOR_CAPS", None)
    full_env.update(env or {})
    return subprocess.run([BINARY, *map(str, args)], capture_output=True, text=True, env=full_env)


class CliTest(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def write(self, name, text):
        path = self.dir / name
        path.write_text(text)
        return path

    def ok(self, *args, **kw):
        r = run(*args, **kw)
        self.assertEqual(r.returncode, 0, f"{args}: {r.stderr}")
        return r.stdout

    def json_ok(self, schema, *args):
        doc = json.loads(self.ok(*args, "--json"))
        jsonschema.validate(doc, json.loads((SCHEMAS / f"{schema}.json").read_text()))
        return doc

    # Examples

    def test_strong_product_of_two_k2_is_k4(self):
        k2 = self.write("k2.hg", K2)
        self.assertEqual(self.ok("product", "--kind", "strong", k2, k2), K4)

    def test_validate_rejects_single_three_edge(self):
        r = run("validate", self.write("t3.hg", T3))
        self.assertEqual(r.returncode, 1)
        self.assertIn("not thin", r.stderr)
        self.assertIn("thin no", r.stdout)

    def test_factorize_k4_is_rejected_as_not_thin(self):
        r = run("factorize", "--kind", "strong", self.write("k4.hg", K4), "--json")
        self.assertEqual(r.returncode, 1)
        self.assertIn("{0,1,2,3}", r.stderr)

    def test_factorize_king_graph(self):
        p3 = self.write("p3.hg", P3)
        king = self.dir / "king.hg"
        self.ok("product", "--kind", "strong", p3, p3, "-o", king)
        doc = self.json_ok("factorize", "factorize", "--kind", "strong", king, "--certificate")
        self.assertEqual(doc["factors"], [{"n": 3, "edges": [[0, 1], [1, 2]]}] * 2)
        self.assertEqual(doc["skeleton"]["removed_edges"], 8)
        self.assertEqual(sorted(doc["certificate"]["bijection"]), list(range(9)))

        text = self.ok("factorize", "--kind", "normal", king, "--out-prefix", self.dir / "f", "--coords",
                       self.dir / "c.txt")
        self.assertTrue(text.startswith("# normal prime factors: 2\n"))
        self.assertEqual((self.dir / "f1.hg").read_text(), P3)
        self.assertEqual((self.dir / "f2.hg").read_text(), P3)
        self.assertTrue((self.dir / "c.txt").read_text().startswith("coordinates 9 2\ndims 3 3\nv 0 "))

    def test_factorize_cartesian_c4(self):
        doc = self.json_ok("factorize", "factorize", "--kind", "cartesian", self.write("c4.hg", C4))
        self.assertEqual(doc["factors"], [{"n": 2, "edges": [[0, 1]]}] * 2)

    def test_prime_stays_prime(self):
        doc = self.json_ok("factorize", "factorize", "--kind", "normal", self.write("t.hg", T3_PRIME))
        self.assertEqual(len(doc["factors"]), 1)

    def test_skeleton_removed_file(self):
        p3 = self.write("p3.hg", P3)
        king = self.dir / "king.hg"
        self.ok("product", "--kind", "strong", p3, p3, "-o", king)
        cart = self.ok("product", "--kind", "cartesian", p3, p3)
        self.assertEqual(self.ok("skeleton", king, "--removed", self.dir / "removed.hg"), cart)
        removed = (self.dir / "removed.hg").read_text().splitlines()
        self.assertEqual(removed[0], "hypergraph 9 8")
        doc = self.json_ok("skeleton", "skeleton", king)
        self.assertEqual(len(doc["removed"]), 8)
        self.assertEqual(self.ok("oracle", "dispensable", king).splitlines()[1:], removed[1:])

    def test_count_and_oracle_count(self):
        t3 = self.write("t3.hg", T3)
        k2 = self.write("k2.hg", K2)
        doc = self.json_ok("count", "count", "--kind", "strong", t3, k2, "--exact")
        self.assertEqual((doc["formula"], doc["enumerated"], doc["agrees"]), ("6", "6", True))
        self.assertEqual(self.json_ok("oracle-count", "oracle", "count", "--kind", "normal", 2, 3)["count"], 6)
        self.assertEqual(self.json_ok("oracle-count", "oracle", "count", "--kind", "strong", 3, 2)["count"], 6)

    def test_iso_distance_two_section_validate_json(self):
        p3 = self.write("p3.hg", P3)
        k2 = self.write("k2.hg", K2)
        self.assertTrue(self.json_ok("iso", "iso", p3, p3)["isomorphic"])
        self.assertIsNone(self.json_ok("iso", "iso", p3, k2)["bijection"])
        self.assertEqual(self.json_ok("distance", "distance", p3, 0, 2)["distance"], 2)
        self.assertEqual(self.json_ok("distance", "oracle", "distance", p3, 0, 2)["distance"], 2)
        self.assertEqual(self.ok("distance", self.write("d.hg", DISCONNECTED), 0, 3), "inf\n")
        self.assertEqual(self.json_ok("hypergraph", "two-section", self.write("t3.hg", T3))["edges"],
                         [[0, 1], [0, 2], [1, 2]])
        self.json_ok("validate", "validate", p3)
        self.json_ok("product", "product", "--kind", "normal", p3, k2)
        self.json_ok("oracle-pfd", "oracle", "pfd", "--kind", "strong", self.write("c4.hg", C4))
        self.json_ok("hypergraph", "oracle", "dispensable", p3)

    # Generator

    def test_gen_is_deterministic(self):
        args = ("gen", "--n", 5, "--rank", 3, "--seed", 1, "--require", "thin,connected")
        first = self.ok(*args)
        self.assertEqual(first, self.ok(*args))
        self.assertTrue(first.startswith("# generated seed=1 n=5 rank_max=3"))
        doc = self.json_ok("gen", *args)
        self.assertIn("attempts=", doc["provenance"])

    def test_gen_trivial_and_infeasible(self):
        self.assertIn("hypergraph 1 0\n", self.ok("gen", "--n", 1))
        self.assertEqual(run("gen", "--n", 2, "--rank", 3, "--attempts", 50).returncode, 3)

    def test_gen_prime(self):
        out = self.dir / "g.hg"
        self.ok("gen", "--n", 6, "--rank", 2, "--seed", 3, "--require", "thin,connected,prime", "-o", out)
        self.assertEqual(len(self.json_ok("oracle-pfd", "oracle", "pfd", "--kind", "strong", out)["factors"]), 1)

    # Exit codes and determinism

    def test_exit_codes(self):
        bad = self.write("bad.hg", "hypergraph 3 1\ne 0 7\n")
        self.assertEqual(run("validate", bad).returncode, 2)
        self.assertEqual(run("validate", self.dir / "missing.hg").returncode, 2)
        self.assertEqual(run("bogus").returncode, 2)
        self.assertEqual(run("factorize", self.write("d.hg", DISCONNECTED)).returncode, 1)
        p3 = self.write("p3.hg", P3)
        self.assertEqual(run("--caps", "product_max_vertices=5", "product", p3, p3).returncode, 3)
        self.assertEqual(run("product", p3, p3, env={"HYPERFACTOR_CAPS": "product_max_vertices=5"}).returncode, 3)
        self.assertEqual(run("--caps", "no_such_cap=1", "validate", p3).returncode, 2)

    def test_outputs_are_byte_identical(self):
        p3 = self.write("p3.hg", P3)
        king = self.dir / "king.hg"
        self.ok("product", "--kind", "strong", p3, p3, "-o", king)
        for args in (("factorize", "--kind", "strong", king, "--json", "--certificate"),
                     ("factorize", "--kind", "cartesian", king), ("skeleton", king, "--json")):
            self.assertEqual(self.ok(*args), self.ok(*args))

    def test_json_and_text_inputs_agree(self):
        j = self.write("p3.json", '{"n":3,"edges":[[0,1],[1,2]]}')
        self.assertEqual(self.ok("product", "--kind", "strong", j, j), self.ok(
            "product", "--kind", "strong", self.write("p3.hg", P3), self.write("p3b.hg", P3)))


if __name__ == "__main__":
    BINARY = sys.argv[1]
    SCHEMAS = Path(sys.argv[2])
    unittest.main(argv=[sys.argv[0], "-v"])
