"""Smoke test for the small_overlap extension module.

Build with `maturin develop` (or copy the compiled library to
small_overlap.so on PYTHONPATH) and run from the repository root.
"""

import json
import pathlib
import sys

import small_overlap as so

DATA = pathlib.Path(__file__).resolve().parents[3] / "data"


def main():
    p = so.Presentation.from_file(DATA / "one_relation.pres")
    assert p.alphabet == "abcd"
    assert p.relations == [("abbba", "cdc")]
    assert p.is_c4()

    k = so.Kambites(p)
    assert k.normal_form("cdcdcabbbabbbabbcd") == "abbbadcabbbabbbabbcd"
    assert k.normal_form("cdabbbcdc") == "abbbadcbbba"
    assert k.normal_form("_") == "_"
    assert k.equivalent("cdabbbcdc", "abbbadcbbba")
    assert not k.equivalent("ab", "ba")
    assert so.word_problem(p, "ab", "ba") == "not-equivalent"

    q = so.Presentation.from_file(DATA / "replace_prefix.pres")
    members, truncated = q.equivalence_class("acba")
    assert members == ["aabc", "acba", "dbbd"] and not truncated
    kq = so.Kambites(q)
    out = kq.replace_prefix("acba", "a")
    assert out.startswith("a") and kq.equivalent(out, "acba")

    three = so.Presentation.from_file(DATA / "three_pieces.pres")
    assert three.c_index() == 3 and not three.is_c4()
    assert so.word_problem(three, "abc", "cba") == "not-C(4)"
    try:
        so.Kambites(three)
    except so.NotC4Error:
        pass
    else:
        raise AssertionError("expected NotC4Error")

    report = json.loads(so.Presentation.from_file(DATA / "c4_not_c5.pres").analyze_json(pieces=True))
    assert report["pieces"] == ["_", "a", "b", "bb", "c", "d"]
    assert so.Presentation.from_file(DATA / "unbounded.pres").c_index() is None

    try:
        k.normal_form("xyz")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    try:
        so.Kambites(p, cap=1).normal_form("cdabbbcdc")
    except so.UndecidedError:
        pass
    else:
        raise AssertionError("expected UndecidedError")

    print("smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
