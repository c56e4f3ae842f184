#!/usr/bin/env python3
"""Prepends the project license header to C++ sources that lack it."""
import pathlib
import sys

HEADER = """// Copyright 2026 The Quantal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

"""

root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else ".")
for sub in ("include", "src", "tests", "tools", "bench"):
    for path in sorted((root / sub).rglob("*")):
        if path.suffix not in (".h", ".cc"):
            continue
        text = path.read_text()
        if not text.startswith("// Copyright"):
            path.write_text(HEADER + text)
