#!/usr/bin/env python3
"""Regenerates the JSON fixtures under fixtures/.

Host 2-categories are built as sub-2-categories of Cat: objects are small
categories, 1-cells are the closure of some generating functors under
composition and 2-cells are all natural transformations between parallel
1-cells. Validity of the tables is then inherited from Cat.
"""

import itertools
import json
import pathlib
import sys


class Cat:
    def __init__(self, objects, arrows=(), comp=None):
        # arrows: (name, src, tgt) excluding identities; comp: {(g, f): gf}
        self.objects = list(objects)
        self.arrows = [("1" + o, o, o) for o in self.objects] + list(arrows)
        self.src = {a: s for a, s, _ in self.arrows}
        self.tgt = {a: t for a, _, t in self.arrows}
        self.comp = {}
        for a, s, t in self.arrows:
            self.comp[("1" + t, a)] = a
            self.comp[(a, "1" + s)] = a
        for k, v in (comp or {}).items():
            self.comp[k] = v

    def ident(self, o):
        return "1" + o

    def hom(self, x, y):
        return [a for a, s, t in self.arrows if s == x and t == y]

    def then(self, f, g):
        return self.comp[(g, f)]


def discrete(names):
    return Cat(names)


def indiscrete(names):
    arrows = [(f"{x}{y}", x, y) for x in names for y in names if x != y]
    comp = {}
    for x, y, z in itertools.product(names, repeat=3):
        if x == y or y == z:
            continue
        comp[(f"{y}{z}", f"{x}{y}")] = "1" + x if x == z else f"{x}{z}"
    return Cat(names, arrows, comp)


def parallel_pair():
    return Cat(["x", "y"], [("a", "x", "y"), ("b", "x", "y")])


def arrow_cat():
    return Cat(["0", "1"], [("le", "0", "1")])


def z2():
    return Cat(["o"], [("s", "o", "o")], {("s", "s"): "1o"})


class Functor:
    def __init__(self, src, tgt, ob, mor):
        self.src, self.tgt, self.ob = src, tgt, dict(ob)
        self.mor = {a: mor.get(a) for a, _, _ in src.arrows}
        for o in src.objects:
            self.mor["1" + o] = "1" + self.ob[o]
        for a, _, _ in src.arrows:
            assert self.mor[a] is not None, a

    def key(self):
        return (tuple(sorted(self.ob.items())), tuple(sorted(self.mor.items())))


def compose(g, f):
    return Functor(f.src, g.tgt, {o: g.ob[f.ob[o]] for o in f.src.objects},
                   {a: g.mor[f.mor[a]] for a, _, _ in f.src.arrows})


def nat_trans(f, g):
    """All natural transformations f => g, in lexicographic order."""
    c, d = f.src, f.tgt
    choices = [d.hom(f.ob[o], g.ob[o]) for o in c.objects]
    out = []
    for comps in itertools.product(*choices):
        eta = dict(zip(c.objects, comps))
        if all(d.then(eta[s], g.mor[a]) == d.then(f.mor[a], eta[t]) for a, s, t in c.arrows):
            out.append(eta)
    return out


class Concrete2Cat:
    def __init__(self, objects, generators):
        # objects: {name: Cat}; generators: [(name, src, tgt, ob, mor)]
        self.cats = dict(objects)
        self.objects = sorted(objects)
        self.ones = {}
        self.one_src, self.one_tgt = {}, {}
        by_key = {}

        def add(name, s, t, fun):
            k = (s, t, fun.key())
            if k in by_key:
                return by_key[k]
            by_key[k] = name
            self.ones[name] = fun
            self.one_src[name], self.one_tgt[name] = s, t
            return name

        for o in self.objects:
            c = self.cats[o]
            add("id_" + o, o, o, Functor(c, c, {x: x for x in c.objects},
                                         {a: a for a, _, _ in c.arrows}))
        for name, s, t, ob, mor in generators:
            add(name, s, t, Functor(self.cats[s], self.cats[t], ob, mor))
        self.name_of = by_key
        changed = True
        while changed:
            changed = False
            for f, g in itertools.product(list(self.ones), repeat=2):
                if self.one_tgt[f] != self.one_src[g]:
                    continue
                h = compose(self.ones[g], self.ones[f])
                k = (self.one_src[f], self.one_tgt[g], h.key())
                if k not in by_key:
                    add(f"{g}.{f}", self.one_src[f], self.one_tgt[g], h)
                    changed = True

        self.hc1 = {}
        for f, g in itertools.product(self.ones, repeat=2):
            if self.one_tgt[f] == self.one_src[g]:
                h = compose(self.ones[g], self.ones[f])
                self.hc1[(g, f)] = by_key[(self.one_src[f], self.one_tgt[g], h.key())]

        self.twos = {}
        self.two_src, self.two_tgt = {}, {}
        self.two_key = {}
        for f, g in itertools.product(sorted(self.ones), repeat=2):
            if (self.one_src[f], self.one_tgt[f]) != (self.one_src[g], self.one_tgt[g]):
                continue
            for k, eta in enumerate(nat_trans(self.ones[f], self.ones[g])):
                name = f"1_{f}" if f == g and all(
                    eta[o] == "1" + self.ones[f].ob[o] for o in self.ones[f].src.objects) \
                    else f"t{k}_{f}_{g}"
                self.twos[name] = eta
                self.two_src[name], self.two_tgt[name] = f, g
                self.two_key[(f, g, tuple(sorted(eta.items())))] = name

    def find_two(self, f, g, eta):
        return self.two_key[(f, g, tuple(sorted(eta.items())))]

    def to_json(self):
        objs = self.objects
        ones = sorted(self.ones)
        twos = sorted(self.twos)
        vc, h1, h2 = [], [], []
        for a, b in itertools.product(twos, repeat=2):
            if self.two_tgt[a] != self.two_src[b]:
                continue
            f = self.two_src[a]
            d = self.ones[f].tgt
            eta = {o: d.then(self.twos[a][o], self.twos[b][o]) for o in self.ones[f].src.objects}
            vc.append({"g": b, "f": a, "result": self.find_two(f, self.two_tgt[b], eta)})
        for (g, f), r in sorted(self.hc1.items()):
            h1.append({"g": g, "f": f, "result": r})
        for a, b in itertools.product(twos, repeat=2):
            f, f2 = self.two_src[a], self.two_tgt[a]
            g, g2 = self.two_src[b], self.two_tgt[b]
            if self.one_tgt[f] != self.one_src[g]:
                continue
            e = self.cats[self.one_tgt[g]]
            G, G2 = self.ones[g], self.ones[g2]
            # (b a)_x = b_{f2 x} . G(a_x)
            eta = {o: e.then(G.mor[self.twos[a][o]], self.twos[b][self.ones[f2].ob[o]])
                   for o in self.ones[f].src.objects}
            h2.append({"g": b, "f": a,
                       "result": self.find_two(self.hc1[(g, f)], self.hc1[(g2, f2)], eta)})
        return {
            "format": 1,
            "objects": objs,
            "one_cells": [{"id": f, "src": self.one_src[f], "tgt": self.one_tgt[f]} for f in ones],
            "two_cells": [{"id": a, "src": self.two_src[a], "tgt": self.two_tgt[a]} for a in twos],
            "id1": {o: "id_" + o for o in objs},
            "id2": {f: "1_" + f for f in ones},
            "vcomp": vc,
            "hcomp1": h1,
            "hcomp2": h2,
        }

    def inclusion_json(self, source_ref):
        """The Cat-valued 2-functor sending each object to its category."""
        fibers = {o: fincat_json(self.cats[o]) for o in self.objects}
        map1 = {}
        for f in sorted(self.ones):
            fun = self.ones[f]
            map1[f] = {"objects": dict(sorted(fun.ob.items())),
                       "morphisms": dict(sorted(fun.mor.items()))}
        map2 = {a: dict(sorted(self.twos[a].items())) for a in sorted(self.twos)}
        return {"format": 1, "source": source_ref, "fibers": fibers, "map_1": map1, "map_2": map2}


def fincat_json(c):
    comp = []
    for (g, f), r in sorted(c.comp.items()):
        comp.append({"g": g, "f": f, "result": r})
    return {
        "objects": c.objects,
        "morphisms": [{"id": a, "src": s, "tgt": t} for a, s, t in c.arrows],
        "identity": {o: "1" + o for o in c.objects},
        "comp": comp,
    }


def locally_discrete(objects, arrows, comp):
    """A 1-category viewed as a 2-category with only identity 2-cells."""
    one = sorted(["id_" + o for o in objects] + [a for a, _, _ in arrows])
    src = {"id_" + o: o for o in objects}
    tgt = {"id_" + o: o for o in objects}
    for a, s, t in arrows:
        src[a], tgt[a] = s, t
    h1 = {}
    for f in one:
        h1[("id_" + tgt[f], f)] = f
        h1[(f, "id_" + src[f])] = f
    h1.update(comp)
    return {
        "format": 1,
        "objects": sorted(objects),
        "one_cells": [{"id": f, "src": src[f], "tgt": tgt[f]} for f in one],
        "two_cells": [{"id": "1_" + f, "src": f, "tgt": f} for f in one],
        "id1": {o: "id_" + o for o in sorted(objects)},
        "id2": {f: "1_" + f for f in one},
        "vcomp": [{"g": "1_" + f, "f": "1_" + f, "result": "1_" + f} for f in one],
        "hcomp1": [{"g": g, "f": f, "result": r} for (g, f), r in sorted(h1.items())],
        "hcomp2": [{"g": "1_" + g, "f": "1_" + f, "result": "1_" + r}
                   for (g, f), r in sorted(h1.items())],
    }


def write(path, data):
    path.write_text(json.dumps(data, indent=1, sort_keys=False) + "\n")


def main(out):
    out.mkdir(parents=True, exist_ok=True)
    term = Cat(["*"])
    write(out / "terminal.2cat.json", locally_discrete(["*"], [], {}))
    write(out / "discrete2.2cat.json", locally_discrete(["A", "B"], [], {}))
    write(out / "poset01.2cat.json", locally_discrete(["0", "1"], [("u", "0", "1")], {}))
    write(out / "chain012.2cat.json", locally_discrete(
        ["0", "1", "2"], [("u", "0", "1"), ("v", "1", "2"), ("w", "0", "2")],
        {("v", "u"): "w", ("id_2", "w"): "w", ("w", "id_0"): "w"}))
    write(out / "cospan.2cat.json", locally_discrete(
        ["a", "b", "t"], [("p", "a", "t"), ("q", "b", "t")], {}))

    iso = Concrete2Cat({"0": term, "1": indiscrete(["m", "n"])},
                       [("u", "0", "1", {"*": "m"}, {}), ("v", "0", "1", {"*": "n"}, {})])
    write(out / "isopair.2cat.json", iso.to_json())

    host = Concrete2Cat(
        {"A": term, "B": discrete(["b0", "b1"]), "C": parallel_pair()},
        [("e", "A", "B", {"*": "b0"}, {}),
         ("p", "B", "C", {"b0": "x", "b1": "x"}, {}),
         ("q", "B", "C", {"b0": "y", "b1": "y"}, {})])
    write(out / "host3.2cat.json", host.to_json())
    write(out / "host3_incl.catvalued.json", host.inclusion_json("host3.2cat.json"))

    arrow = arrow_cat()
    interval = Concrete2Cat(
        {"P": term, "Q": arrow},
        [("s", "P", "Q", {"*": "0"}, {}), ("t", "P", "Q", {"*": "1"}, {}),
         ("c0", "Q", "Q", {"0": "0", "1": "0"}, {"le": "10"}),
         ("c1", "Q", "Q", {"0": "1", "1": "1"}, {"le": "11"})])
    write(out / "interval.2cat.json", interval.to_json())
    write(out / "interval_incl.catvalued.json", interval.inclusion_json("interval.2cat.json"))

    zz = Concrete2Cat({"G": z2()}, [("n", "G", "G", {"o": "o"}, {"s": "1o"})])
    write(out / "z2.2cat.json", zz.to_json())
    write(out / "z2_incl.catvalued.json", zz.inclusion_json("z2.2cat.json"))

    two = discrete(["a", "b"])
    write(out / "poset01_F.diag.json", {
        "format": 1,
        "source": "poset01.2cat.json",
        "fibers": {"0": fincat_json(two), "1": fincat_json(term)},
        "map_1": {
            "id_0": {"objects": {"a": "a", "b": "b"}, "morphisms": {"1a": "1a", "1b": "1b"}},
            "id_1": {"objects": {"*": "*"}, "morphisms": {"1*": "1*"}},
            "u": {"objects": {"a": "*", "b": "*"}, "morphisms": {"1a": "1*", "1b": "1*"}},
        },
        "map_2": {"1_id_0": {"a": "1a", "b": "1b"}, "1_id_1": {"*": "1*"}, "1_u": {"a": "1*", "b": "1*"}},
    })

    def pro(name, index, host, ob, one=None, two=None):
        return {"format": 1, "name": name, "index": index, "host": host,
                "diagram": {"map_obj": ob, "map_1": one or {}, "map_2": two or {}}}

    write(out / "isopair_X.pro.json",
          pro("X", "poset01.2cat.json", "isopair.2cat.json", {"0": "1", "1": "0"}, {"u": "u"}))
    write(out / "isopair_c0.pro.json", pro("c(0)", "terminal.2cat.json", "isopair.2cat.json", {"*": "0"}))
    write(out / "isopair_c1.pro.json", pro("c(1)", "terminal.2cat.json", "isopair.2cat.json", {"*": "1"}))
    write(out / "host3_X.pro.json",
          pro("X", "poset01.2cat.json", "host3.2cat.json", {"0": "C", "1": "B"}, {"u": "p"}))
    write(out / "host3_Y.pro.json",
          pro("Y", "poset01.2cat.json", "host3.2cat.json", {"0": "B", "1": "A"}, {"u": "e"}))
    write(out / "host3_cA.pro.json", pro("c(A)", "terminal.2cat.json", "host3.2cat.json", {"*": "A"}))

    write(out / "kx_terminal.kx.json", {
        "format": 1, "index": "terminal.2cat.json", "host": "isopair.2cat.json",
        "objects": {"*": "isopair_X.pro.json"}, "arrows": {}, "cells": {}})
    write(out / "kx_poset.kx.json", {
        "format": 1, "index": "poset01.2cat.json", "host": "isopair.2cat.json",
        "objects": {"0": "isopair_c1.pro.json", "1": "isopair_c0.pro.json"},
        "arrows": {"u": {"*": ["u", "*"]}}, "cells": {}})
    write(out / "kx_host3_terminal.kx.json", {
        "format": 1, "index": "terminal.2cat.json", "host": "host3.2cat.json",
        "objects": {"*": "host3_X.pro.json"}, "arrows": {}, "cells": {}})
    write(out / "kx_host3_poset.kx.json", {
        "format": 1, "index": "poset01.2cat.json", "host": "host3.2cat.json",
        "objects": {"0": "host3_X.pro.json", "1": "host3_Y.pro.json"},
        "arrows": {"u": {"0": ["p", "0"], "1": ["id_B", "0"]}}, "cells": {}})


if __name__ == "__main__":
    main(pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else
                      pathlib.Path(__file__).resolve().parent.parent / "fixtures"))
