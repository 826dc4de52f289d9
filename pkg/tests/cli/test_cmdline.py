# SPDX-License-Identifier: GPL-3.0-or-later
# vim: et:ts=4
import io
import json
import os
import os.path
import shlex
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from toeplitz_involution.cmdline import main
from toeplitz_involution.poly import poly_from_json, poly_parse
from toeplitz_involution.ring import ZZ
from toeplitz_involution.toeplitz import minor_table

GOLDEN = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


def run(*argv):
    """Run the command line, returning (status, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    status = None
    with redirect_stdout(out), redirect_stderr(err):
        try:
            main(list(argv))
        except SystemExit as e:
            status = e.code
    return status, out.getvalue(), err.getvalue()


class TestMinors(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(run("minors", "--n", "2", "--ring", "z"),
                         (0, "m1 = x1\nm2 = x1^2 - x2\n", ""))
        self.assertEqual(run("minors", "--n", "1", "--ring", "zmod:2")[:2], (0, "m1 = x1\n"))
        status, out, _ = run("minors", "--n", "4", "--ring", "z")
        self.assertEqual(status, 0)
        self.assertEqual(out.splitlines()[3], "m4 = x1^4 - 3*x1^2*x2 + 2*x1*x3 + x2^2 - x4")

    def test_output_parses_back(self):
        n = 7
        status, out, _ = run("minors", "--n", str(n))
        self.assertEqual(status, 0)
        table = minor_table(ZZ, n)
        lines = out.splitlines()
        self.assertEqual(len(lines), n)
        for k, line in enumerate(lines, 1):
            name, poly = line.split(" = ", 1)
            self.assertEqual(name, "m%d" % k)
            self.assertEqual(poly_parse(ZZ, n, poly), table[k])

    def test_deterministic(self):
        first = run("minors", "--n", "6", "--ring", "zmod:6")
        self.assertEqual(run("minors", "--n", "6", "--ring", "zmod:6"), first)

    def test_single_order(self):
        self.assertEqual(run("minors", "--n", "3", "--k", "3")[:2], (0, "m3 = x1^3 - 2*x1*x2 + x3\n"))
        self.assertEqual(run("minors", "--n", "3", "--k", "4")[0], 2)
        self.assertEqual(run("minors", "--n", "3", "--k", "0")[0], 2)

    def test_methods(self):
        expected = run("minors", "--n", "5", "--ring", "zmod:8")
        for method in ("leibniz", "berkowitz"):
            self.assertEqual(run("minors", "--n", "5", "--ring", "zmod:8", "--method", method), expected)
        status, out, err = run("minors", "--n", "9", "--k", "9", "--method", "leibniz")
        self.assertEqual((status, out), (2, ""))
        self.assertTrue(err.startswith("error: "))

    def test_json(self):
        status, out, _ = run("minors", "--n", "3", "--format", "json")
        self.assertEqual(status, 0)
        obj = json.loads(out)
        self.assertEqual([entry["k"] for entry in obj], [1, 2, 3])
        self.assertEqual(poly_from_json(obj[1]["poly"]), poly_parse(ZZ, 3, "x1^2 - x2"))

    def test_limits(self):
        status, out, err = run("minors", "--n", "30")
        self.assertEqual((status, out), (2, ""))
        self.assertIn("--max-n", err)
        self.assertEqual(run("minors", "--n", "0")[0], 2)
        self.assertEqual(run("minors", "--n", "3", "--max-n", "2")[0], 2)

    def test_config_file(self):
        fd, path = tempfile.mkstemp(suffix=".ini")
        try:
            with os.fdopen(fd, "w") as f:
                f.write("[limits]\nmax_n = 3\n\n[defaults]\nring = zmod:2\n")
            self.assertEqual(run("minors", "--n", "4", "--config", path)[0], 2)
            self.assertEqual(run("minors", "--n", "4", "--config", path, "--max-n", "4")[0], 0)
            self.assertEqual(run("minors", "--n", "2", "--config", path)[:2], (0, "m1 = x1\nm2 = x1^2 + x2\n"))
        finally:
            os.remove(path)

    def test_leibniz_limit_from_config(self):
        fd, path = tempfile.mkstemp(suffix=".ini")
        try:
            with os.fdopen(fd, "w") as f:
                f.write("[limits]\nleibniz_max_size = 3\n")
            status, out, err = run("minors", "--n", "4", "--k", "4", "--method", "leibniz", "--config", path)
            self.assertEqual((status, out), (2, ""))
            self.assertIn("limited to size 3", err)
            self.assertEqual(run("minors", "--n", "4", "--k", "3", "--method", "leibniz", "--config", path)[:2],
                             (0, "m3 = x1^3 - 2*x1*x2 + x3\n"))
            self.assertEqual(run("minors", "--n", "4", "--k", "4", "--method", "berkowitz", "--config", path)[:2],
                             (0, "m4 = x1^4 - 3*x1^2*x2 + 2*x1*x3 + x2^2 - x4\n"))
        finally:
            os.remove(path)

    def test_missing_config_file(self):
        self.assertEqual(run("minors", "--n", "1", "--config", "/nonexistent/settings.ini")[:2],
                         (0, "m1 = x1\n"))


class TestPhi(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(run("phi", "--n", "2", "--ring", "z", "--poly", "x2")[:2], (0, "x1^2 - x2\n"))
        self.assertEqual(run("phi", "--n", "2", "--ring", "z", "--poly", "x2", "--twice")[:2], (0, "x2\n"))
        self.assertEqual(run("phi", "--n", "3", "--ring", "z", "--poly", "5")[:2], (0, "5\n"))

    def test_twice_is_identity(self):
        poly = "3*x1^2*x4 - x2*x3 + 7"
        status, out, _ = run("phi", "--n", "4", "--ring", "zmod:8", "--poly", poly, "--twice")
        self.assertEqual(status, 0)
        self.assertEqual(out, "3*x1^2*x4 + 7*x2*x3 + 7\n")

    def test_json(self):
        status, out, _ = run("phi", "--n", "2", "--poly", "x2", "--format", "json")
        self.assertEqual(status, 0)
        self.assertEqual(poly_from_json(json.loads(out)), poly_parse(ZZ, 2, "x1^2 - x2"))

    def test_parse_errors(self):
        status, out, err = run("phi", "--n", "2", "--ring", "z", "--poly", "x1 + x3")
        self.assertEqual((status, out), (2, ""))
        self.assertIn("error: --poly:6: variable x3 out of range", err)
        self.assertIn("  x1 + x3\n       ^", err)
        status, out, err = run("phi", "--n", "2", "--poly", "x1 % x2")
        self.assertEqual((status, out), (2, ""))
        self.assertIn("--poly:4:", err)

    def test_bad_ring(self):
        for ring in ("zmod:1", "q", "zmod:"):
            status, _, err = run("phi", "--n", "2", "--ring", ring, "--poly", "x1")
            self.assertEqual(status, 2, ring)
            self.assertIn("--ring: ", err)

    def test_usage(self):
        self.assertEqual(run("phi", "--n", "2")[0], 2)
        self.assertEqual(run("frobnicate", "--n", "2")[0], 2)
        self.assertEqual(run()[0], 2)


class TestVerify(unittest.TestCase):

    def test_generators(self):
        status, out, _ = run("verify", "--n", "8", "--ring", "z")
        self.assertEqual(status, 0)
        lines = out.splitlines()
        self.assertEqual(len(lines), 8)
        for k, line in enumerate(lines, 1):
            self.assertTrue(line.startswith("PASS k=%d " % k), line)
            self.assertTrue(line.endswith("phi(phi(x%d)) = x%d" % (k, k)), line)
        self.assertEqual(run("verify", "--n", "1", "--ring", "zmod:6")[0], 0)

    def test_json(self):
        status, out, _ = run("verify", "--n", "10", "--ring", "zmod:2", "--format", "json")
        self.assertEqual(status, 0)
        obj = json.loads(out)
        self.assertIs(obj["overall"], True)
        self.assertEqual(obj["ring"], "zmod:2")
        self.assertEqual(len(obj["generators"]), 10)
        self.assertTrue(all(g["pass"] for g in obj["generators"]))

    def test_corrupted_table(self):
        status, out, _ = run("verify", "--n", "3", "--ring", "z", "--replace-minor", "2=x2")
        self.assertEqual(status, 1)
        self.assertEqual(out.splitlines()[2],
                         "FAIL k=3 phi(x3) = x1^3 - 2*x1*x2 + x3; phi(phi(x3)) = 2*x1^3 - 4*x1*x2 + x3")
        status, out, _ = run("verify", "--n", "3", "--replace-minor", "2=x2", "--format", "json")
        self.assertEqual(status, 1)
        obj = json.loads(out)
        self.assertIs(obj["overall"], False)
        self.assertEqual([g["k"] for g in obj["generators"] if not g["pass"]], [3])

    def test_bad_replacements(self):
        for spec in ("2", "two=x2", "0=1", "4=x1", "2=x3"):
            status, out, err = run("verify", "--n", "3", "--replace-minor", spec)
            self.assertEqual((status, out), (2, ""), spec)
            self.assertTrue(err.startswith("error: "), spec)
        status, _, err = run("verify", "--n", "2", "--replace-minor", "2=x1 $")
        self.assertEqual(status, 2)
        self.assertIn("--replace-minor:6:", err)


class TestColumnDeterminant(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(run("colsdet", "--n", "2", "--ring", "z", "--column", "x1,x2")[:2], (0, "x1^2 - x2\n"))
        self.assertEqual(run("colsdet", "--n", "2", "--ring", "z", "--column", "1,0")[:2], (0, "x1\n"))
        self.assertEqual(run("colsdet", "--n", "1", "--ring", "z", "--column", "7")[:2], (0, "7\n"))

    def test_json(self):
        status, out, _ = run("colsdet", "--n", "4", "--column", "x3,x4", "--format", "json")
        self.assertEqual(status, 0)
        obj = json.loads(out)
        self.assertEqual(obj["k"], 2)
        self.assertEqual(poly_from_json(obj["poly"]), poly_parse(ZZ, 4, "x1*x3 - x4"))

    def test_errors(self):
        status, _, err = run("colsdet", "--n", "3", "--column", "1,x%")
        self.assertEqual(status, 2)
        self.assertIn("error: --column:4: ", err)
        self.assertIn("(in entry 2)", err)
        self.assertEqual(run("colsdet", "--n", "1", "--column", "1,1")[0], 2)
        self.assertEqual(run("colsdet", "--n", "2", "--column", "1,")[0], 2)


class TestMatrix(unittest.TestCase):

    def test_text(self):
        self.assertEqual(run("matrix", "--n", "3", "--ring", "z")[:2],
                         (0, "[x1, 1, 0]\n[x2, x1, 1]\n[x3, x2, x1]\n"))
        self.assertEqual(run("matrix", "--n", "3", "--k", "2")[:2], (0, "[x1, 1]\n[x2, x1]\n"))

    def test_json(self):
        status, out, _ = run("matrix", "--n", "2", "--format", "json")
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out), {"k": 2, "rows": [["x1", "1"], ["x2", "x1"]]})


class TestGolden(unittest.TestCase):
    """The cases replayed by tests/run.sh."""

    def test_cases(self):
        cases = sorted(os.listdir(GOLDEN))
        self.assertTrue(cases)
        for case in cases:
            with self.subTest(case=case):
                directory = os.path.join(GOLDEN, case)
                with open(os.path.join(directory, "arguments")) as f:
                    arguments = shlex.split(f.read())
                with open(os.path.join(directory, "expected")) as f:
                    expected = f.read()
                with open(os.path.join(directory, "status")) as f:
                    status = int(f.read())
                self.assertEqual(run(*arguments)[:2], (status, expected))


if __name__ == '__main__':
    unittest.main()
