# SPDX-License-Identifier: GPL-3.0-or-later
# vim: et:ts=4
#
# This is the setup script for toeplitz-involution. Besides the usual
# setuptools work, it writes toeplitz_involution/version.py from
# version.py.in, the version being read from the NEWS file.

import os.path
import re

import setuptools
import setuptools.command.build_py
from setuptools import Command

project_root_dir = os.path.dirname(os.path.abspath(__file__))

# A file f is generated from f.in by replacing @version@.
files_with_substitutions = (os.path.join("toeplitz_involution", "version.py"),)


def extract_version():
    with open(os.path.join(project_root_dir, "NEWS"), "r") as f:
        for line in f:
            if line.startswith("Version"):
                break
        else:
            return "unknown"
    match = re.match(r'^Version ([0-9.]+) ', line)
    return match.group(1) if match else "unknown"


class build_py(setuptools.command.build_py.build_py):

    def generate_files_with_substitutions(self, subs):
        pattern = re.compile("@(" + "|".join(subs.keys()) + ")@")

        def repl(match_object):
            return subs[match_object.group(1)]

        for out_path in files_with_substitutions:
            in_path = os.path.join(project_root_dir, out_path + ".in")
            target = os.path.join(self.build_lib, out_path)
            self.mkpath(os.path.dirname(target))
            with open(in_path, encoding='utf-8') as in_file:
                with open(target, "w", encoding='utf-8') as out_file:
                    for in_line in in_file:
                        out_file.write(pattern.sub(repl, in_line))

    def run(self):
        setuptools.command.build_py.build_py.run(self)
        self.generate_files_with_substitutions({"version": self.distribution.metadata.get_version()})


class clean(Command):
    description = "remove byte-compiled files, editor backups and the generated version.py"
    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def remove_file(self, path):
        if os.path.exists(path):
            self.announce("removing '%s'" % path, level=2)
            os.remove(path)

    def run(self):
        for dirpath, dirnames, filenames in os.walk(project_root_dir):
            for filename in filenames:
                ew = filename.endswith
                if ew("~") or ew(".pyc") or ew(".pyo"):
                    self.remove_file(os.path.join(dirpath, filename))
        for f in files_with_substitutions:
            self.remove_file(os.path.join(project_root_dir, f))


setuptools.setup(
    name="toeplitz-involution",
    version=extract_version(),
    description="principal Toeplitz minors and the involution x_k -> m_k of R[x1..xn]",
    long_description="""\
An exact-arithmetic kernel and command line around the lower Hessenberg
Toeplitz matrices T(k) with entries x_{i-j+1}. It computes their principal
minors m_k by the first-column recursion and by two division-free
determinants, applies the substitution homomorphism x_k -> m_k over the
integers or any Z/M, and verifies that this map is an involution.\
""",
    license="GPL",
    python_requires=">=3.8",
    packages=("toeplitz_involution",),
    package_data={
        "toeplitz_involution": ["defaults.ini"],
    },
    scripts=("bin/toeplitz-involution",),
    extras_require={
        "test": ["pytest", "hypothesis", "sympy"],
    },
    cmdclass={
        "build_py": build_py,
        "clean": clean,
    },
)
