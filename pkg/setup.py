#!/usr/bin/env python

# The MIT License
#
# Copyright (c) 2026 the genuspoly authors
#
# Permission is hereby granted, free of charge, to any person obtaining
# a copy of this software and associated documentation files (the
# "Software"), to deal in the Software without restriction, including
# without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so, subject to
# the following conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS
# BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN
# ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN
# CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

from setuptools import setup

exec(open('genuspoly/version.py').read())

def main():

    install_requires = ['numpy', 'sympy', 'networkx', 'tqdm']

    setup(
        name = "genuspoly",
        version = __version__,
        description = "genus distributions of small graphs and the analysis of their genus polynomials",
        author = "the genuspoly authors",
        license = "MIT",
        keywords = ["graph theory", "topological graph theory", "genus distribution", "polynomials"],
        scripts = ['bin/genuspoly'],
        packages = ['genuspoly'],
        classifiers = [
            "Programming Language :: Python :: 3",
            "Intended Audience :: Science/Research",
            "License :: OSI Approved :: MIT License",
            "Operating System :: OS Independent",
            "Topic :: Scientific/Engineering :: Mathematics",
        ],
        platforms = "Linux, OSX",
        python_requires = ">=3.8",
        install_requires = install_requires,
        extras_require = {'test': ['pytest']},
    )

if __name__ == '__main__':
    main()
