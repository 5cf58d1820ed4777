"""Compare the compiled and pure-Python modular elimination kernels.

    python3 benchmarks/bench_rank.py [--repeat 3] [--largest x=4,y=3]

Rows are the consequence rows of the binary-Leibniz identities at each
two-variable multidegree up to the chosen largest one.
"""
import argparse
import statistics
import time

from nal import linalg
from nal.freealgebra import MultiDegree
from nal.tideal import TIdeal
from nal.varieties import get_variety


def components(largest: MultiDegree):
    nx, ny = largest["x"], largest["y"]
    ideal = TIdeal(get_variety("binary-leibniz").polys)
    for total in range(3, nx + ny + 1):
        i = min(nx, total)
        j = total - i
        if j > ny:
            continue
        md = MultiDegree.of({k: v for k, v in (("x", i), ("y", j)) if v})
        yield md, ideal.component(md)


def timed(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--largest", default="x=4,y=3")
    args = ap.parse_args()
    backends = linalg.available_backends()
    p = linalg.PRIMES[0]
    print(f"backends: {', '.join(backends)}; prime {p}")
    header = f"{'multidegree':<14}{'cols':>7}{'rows':>8}{'rank':>7}" + "".join(f"{b + ' (s)':>15}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for md, comp in components(MultiDegree.parse(args.largest)):
        ncols = comp.dimension
        line = f"{str(md):<14}{ncols:>7}{len(comp.rows):>8}"
        results = {}
        for b in backends:
            results[b] = timed(lambda: linalg.rref_mod(comp.rows, ncols, p, backend=b), args.repeat)
        ranks = {len(r[1][0]) for r in results.values()}
        assert len(ranks) == 1, "kernels disagree"
        line += f"{ranks.pop():>7}" + "".join(f"{results[b][0]:>15.4f}" for b in backends)
        if len(backends) == 2:
            line += f"{results['python'][0] / results['compiled'][0]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
