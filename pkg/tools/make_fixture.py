"""Regenerate the bundled Java fixture corpus under tests/fixtures/java_corpus.

Output is fully determined by SEED, so rerunning leaves the tree unchanged.
"""
from __future__ import annotations

import random
import shutil
from pathlib import Path

SEED = 20190401
N_PROJECTS = 20
FILES_PER_PROJECT = 5
ROOT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "java_corpus"

NOUNS = """account buffer cache channel client config connection context counter
entry event file handler index item key layout list listener manager message
node order parser path record request response result service session socket
state stream table task token user value view window worker""".split()
VERBS = "add build check clear close create find get handle load parse read remove reset run save set update write".split()
ADJS = "active default current max min next old pending raw remote shared total".split()
TYPES = "int long boolean String double".split()
COMMENT_WORDS = "the this value is used to store when a new request arrives and returns cached result for later".split()
NON_EN = ["café", "größe", "número", "über", "señal"]


def camel(rng: random.Random, n: int, upper_first: bool = False) -> str:
    parts = [rng.choice(ADJS + NOUNS) for _ in range(n - 1)] + [rng.choice(NOUNS)]
    out = "".join(p.capitalize() for p in parts)
    return out if upper_first else out[0].lower() + out[1:]


def constant(rng: random.Random) -> str:
    return "_".join(rng.choice(ADJS + NOUNS).upper() for _ in range(rng.randint(2, 3)))


def literal(rng: random.Random, typ: str) -> str:
    if typ in ("int", "long"):
        # mostly one digit so digit splitting barely inflates the token count
        n = rng.choice([0, 1, 2, 0, 1, 3, 5, 8]) if rng.random() < 0.9 else rng.randint(10, 99999)
        return f"{n}L" if typ == "long" and n > 9 else str(n)
    if typ == "boolean":
        return rng.choice(["true", "false"])
    if typ == "double":
        return rng.choice(["0.5", "1.0", "2.5"])
    words = " ".join(rng.choice(COMMENT_WORDS) for _ in range(rng.randint(1, 4)))
    return f'"{words}"'


def comment(rng: random.Random) -> str:
    return " ".join(rng.choice(COMMENT_WORDS) for _ in range(rng.randint(3, 9)))


def method(rng: random.Random, fields: list[tuple[str, str]]) -> list[str]:
    typ, name = rng.choice(fields)
    verb = rng.choice(VERBS)
    mname = verb + name[0].upper() + name[1:]
    arg = camel(rng, rng.randint(1, 2))
    local = camel(rng, rng.randint(1, 3))
    lines = [
        f"    /** {comment(rng)} */",
        f"    public {typ} {mname}({typ} {arg}) {{",
        f"        {typ} {local} = {arg};",
    ]
    if typ in ("int", "long"):
        lines += [
            f"        for (int i = 0; i < {literal(rng, 'int')}; i++) {{",
            f"            {local} += i; // {comment(rng)}",
            "        }",
        ]
    elif typ == "boolean":
        lines += [f"        if (!{local}) {{", f"            this.{name} = {local};", "        }"]
    else:
        lines.append(f"        this.{name} = {local};")
    lines += [f"        return {local};", "    }"]
    return lines


def java_file(rng: random.Random, package: str, cls: str, non_english: bool) -> str:
    fields = [(rng.choice(TYPES), camel(rng, rng.randint(1, 3))) for _ in range(rng.randint(2, 5))]
    lines = [f"package {package};", "", "import java.util.List;", ""]
    lines.append(f"/* {comment(rng)} */")
    lines.append(f"public class {cls} {{")
    lines.append(f"    private static final int {constant(rng)} = {literal(rng, 'int')};")
    for typ, name in fields:
        lines.append(f"    private {typ} {name} = {literal(rng, typ)};")
    if non_english:
        word = rng.choice(NON_EN)
        lines.append(f"    private int {word}{rng.choice(NOUNS).capitalize()} = 0;")
        lines.append(f'    private String label = "{word} {rng.choice(NON_EN)}";')
    lines.append("")
    for _ in range(rng.randint(1, 3)):
        lines += method(rng, fields)
        lines.append("")
    lines.append("}")
    body = "\n".join(lines) + "\n"
    # a few tab-indented files exercise the tab markers
    return body.replace("    ", "\t") if rng.random() < 0.1 else body


def main() -> None:
    rng = random.Random(SEED)
    if ROOT.exists():
        shutil.rmtree(ROOT)
    written: list[Path] = []
    for p in range(N_PROJECTS):
        project = f"project{p:02d}"
        package = f"org.{rng.choice(NOUNS)}.{rng.choice(NOUNS)}"
        for f in range(FILES_PER_PROJECT):
            cls = camel(rng, rng.randint(1, 3), upper_first=True) + str(f)
            sub = "src/main/java/" + package.replace(".", "/") if f % 2 else "src"
            path = ROOT / project / sub / f"{cls}.java"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_bytes(java_file(rng, package, cls, non_english=rng.random() < 0.08).encode("utf-8"))
            written.append(path)
    # exact clones across projects and one clone differing only in line endings
    for i, src in enumerate(written[3:12:3]):
        dst = ROOT / f"project{(i + 7) % N_PROJECTS:02d}" / "copied" / src.name
        dst.parent.mkdir(parents=True, exist_ok=True)
        dst.write_bytes(src.read_bytes())
    crlf_src = written[40]
    dst = ROOT / "project15" / "copied" / ("Crlf" + crlf_src.name)
    dst.parent.mkdir(parents=True, exist_ok=True)
    dst.write_bytes(crlf_src.read_bytes().replace(b"\n", b"\r\n"))
    (ROOT / "project03" / "README.txt").write_text("not java\n")


if __name__ == "__main__":
    main()
