#!/usr/bin/env python3
"""Convert Roothaan-Hartree-Fock STO tables (".slater" text layout, as
distributed with AtomDB from Koga, Kanayama, Watanabe and Thakkar,
Int. J. Quantum Chem. 71, 491 (1999)) into the JSON basis format read by
gradpade.

usage: convert_slater.py INPUT.slater OUTPUT.json
"""
import json
import re
import sys

SHELL_ELECTRONS = {"K": {"1S": 2}, "L": {"2S": 2, "2P": 6},
                   "M": {"3S": 2, "3P": 6, "3D": 10}}
SYMBOLS = {"HELIUM": "He", "LITHIUM": "Li", "BERYLLIUM": "Be", "NEON": "Ne",
           "ARGON": "Ar", "KRYPTON": "Kr", "XENON": "Xe"}


def occupations(header):
    occ = {}
    for label, count in re.findall(r"(\d[SPDF]|[KLM])\((\d+)\)", header):
        if label in SHELL_ELECTRONS:
            occ.update(SHELL_ELECTRONS[label])
        else:
            occ[label] = int(count)
    return occ


def parse(path):
    lines = open(path).read().splitlines()
    header = lines[0].split()
    element = SYMBOLS.get(header[0], header[0].title())
    occ = occupations(lines[0])
    kinetic = float(re.search(r"T =\s*([-\d.]+)", lines[2]).group(1))
    shells = []
    i = 0
    while i < len(lines):
        m = re.match(r"\s+([SPDF])\s+((?:\d[SPDF]\s*)+)$", lines[i])
        if not m:
            i += 1
            continue
        l = "SPDF".index(m.group(1))
        names = m.group(2).split()
        i += 3  # orbital energies and cusp lines
        prims, cols = [], [[] for _ in names]
        while i < len(lines) and re.match(r"\s+\d[SPDF]\s+[\d.]+", lines[i]):
            f = lines[i].split()
            prims.append({"n": int(f[0][0]), "zeta": float(f[1])})
            for j, c in enumerate(f[2:]):
                cols[j].append(float(c))
            i += 1
        for name, coeffs in zip(names, cols):
            shells.append({"l": l, "occ": occ[name], "label": name,
                           "primitives": prims, "coeffs": coeffs})
    return {"element": element, "electron_count": sum(occ.values()),
            "kinetic_energy": kinetic, "shells": shells}


if __name__ == "__main__":
    data = parse(sys.argv[1])
    with open(sys.argv[2], "w") as out:
        json.dump(data, out, indent=1)
        out.write("\n")
