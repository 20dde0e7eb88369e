"""Collects one verdict line per acceptance criterion for the terminal summary."""
import contextlib
import time

RESULTS = {}


@contextlib.contextmanager
def criterion(key, title, budget_s):
    """Record PASS/FAIL for ``key``; the body fills ``info`` with detail strings."""
    info = []
    start = time.perf_counter()
    ok = False
    try:
        yield info
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < budget_s
        if ok and not within:
            info.append(f"time budget {budget_s}s exceeded")
        verdict = "PASS" if ok and within else "FAIL"
        line = f"criterion {key} [{verdict}] {title} ({elapsed:.1f}s): " + "; ".join(info)
        RESULTS[key] = line
        print("\n" + line)
    assert elapsed < budget_s, f"criterion {key} took {elapsed:.1f}s, budget {budget_s}s"
