"""Smoke test for the palgroup extension module. Build it first:

    pip install --no-build-isolation ./crates/python
"""

import json

import palgroup


def product(factors):
    w = palgroup.Word("1")
    for f in factors:
        w = w.concat(palgroup.Word(f))
    return w.reduce()


def main():
    w = palgroup.Word("abBc")
    assert str(w.reduce()) == "ac"
    assert palgroup.Word("aBa").is_palindrome()
    assert str(palgroup.Word("ab").invert()) == "BA"

    k, factors = palgroup.semigroup_pl("abca")
    assert k == 4 and "".join(factors) == "abca"
    assert palgroup.semigroup_pl_fast("abacaba") == 1

    value, factors = palgroup.group_pl("abca")
    assert value == 3
    assert str(product(factors)) == "abca"
    assert all(palgroup.Word(f).is_palindrome() for f in factors)
    assert palgroup.group_pl("abcdefdcba")[0] == 3

    wit = palgroup.match_pl2("abba")
    assert wit is not None and set(wit) == {"A", "P", "Q"}
    assert palgroup.match_pl3("abca")["variant"] in ("ABP", "APB")
    assert palgroup.in_product_closure("abca", 3, 8)
    assert not palgroup.in_product_closure("abca", 2, 8)

    p = palgroup.Pattern("A.P.Q.!A | P Q")
    assert p.match("abba") is not None

    assert "PX=QYRZ" in palgroup.lemma_ids()
    r = json.loads(palgroup.verify_lemma("PX=QYRZ", 2, 4))
    assert r["counterexamples"] == []
    r = json.loads(palgroup.verify_theorem2(2, 5))
    assert r["counterexamples"] == []

    try:
        palgroup.Word("a?")
    except ValueError:
        pass
    else:
        raise AssertionError("bad word accepted")

    print("ok")


if __name__ == "__main__":
    main()
