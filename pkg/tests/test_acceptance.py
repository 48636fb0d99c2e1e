"""The eleven acceptance criteria, each at its stated tolerance.

Every test records one ``criterion N: PASS|FAIL`` line (printed in the pytest
summary) and then asserts, so a failing criterion shows up as a failed test.
"""
from __future__ import annotations

from conftest import ACCEPTANCE
from diracverify.claims import RunConfig, run

DEFAULT = RunConfig()
HUNDRED = RunConfig(random_momenta=100)


def _record(n: int, title: str, report, extra: str = "") -> bool:
    bad = [r for r in report.results if r.status == "FAIL"]
    ok = not bad
    worst = ", ".join(f"{r.claim_id} residual {r.residual:.3g} > {r.tolerance:.1g}" for r in bad)
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {title}"
    if worst:
        line += f" [{worst}]"
    if extra:
        line += f" ({extra})"
    ACCEPTANCE.append(line)
    return ok


def test_criterion_01_clifford():
    assert _record(1, "Clifford algebra, exact", run(DEFAULT, "CL-101"))


def test_criterion_02_derived_operators():
    assert _record(2, "gamma5, P, C, T, T~ identities, exact", run(DEFAULT, "CL-102,CL-103,CL-104,CL-201,CL-601"))


def test_criterion_03_solutions():
    assert _record(3, "eigenvalues, Dirac equation, normalization over 100 momenta x 3 masses",
                   run(HUNDRED, "CL-106,CL-107,CL-108,CL-109"))


def test_criterion_04_chiral_structure():
    report = run(DEFAULT, "CL-207,CL-208,CL-209")
    ortho = report.results[0]
    per_pairing = {k.split(":")[0]: 0.0 for k in ortho.details}
    for k, v in ortho.details.items():
        per_pairing[k.split(":")[0]] = max(per_pairing[k.split(":")[0]], v)
    extra = "orthogonality by pairing: " + ", ".join(f"{k}={v:.2g}" for k, v in per_pairing.items())
    assert _record(4, "orthogonality, Proca and coupled equations, all pairings", report, extra)


def test_criterion_05_currents():
    report = run(DEFAULT, "CL-301,CL-302,CL-303,CL-305,CL-501,CL-502")
    summed = run(DEFAULT, "CL-306").results[0]
    extra = f"pairings 1 and 2; summed pairing divergence {summed.residual:.2g} reported under CL-306"
    assert _record(5, "conservation, derivative and box relations, reality", report, extra)


def test_criterion_06_census():
    report = run(DEFAULT, "CL-307,CL-308")
    assert _record(6, "32 zero currents, 32 nonconserved", report, report.results[1].notes.split(":")[0])


def test_criterion_07_boson_fields():
    fields = run(DEFAULT, "CL-503,CL-504,CL-505,CL-506")
    spins = run(HUNDRED, "CL-507,CL-508")
    combined = fields
    combined.results = fields.results + spins.results
    assert _record(7, "Proca, Maxwell, constant B, spin identities, entangled PDE", combined)


def test_criterion_08_helicity():
    assert _record(8, "h = -P/2 along z, residual ratio <= 0.6 per doubling", run(DEFAULT, "CL-401,CL-405"))


def test_criterion_09_algebra():
    report = run(DEFAULT, "CL-608,CL-609,CL-610,CL-611,CL-612,CL-613,CL-614,CL-616")
    assert _record(9, "split-quaternions, so(2,1), fermionic sector, Jacobi checker", report)


FINDINGS = "CL-210,CL-509,CL-510,CL-603,CL-604,CL-605,CL-606,CL-617,CL-618"


def test_criterion_10_findings():
    report = run(DEFAULT, FINDINGS)
    ok = (report.exit_code == 0
          and all(r.status == "FINDING" for r in report.results)
          and all(r.expected is not None and r.computed is not None for r in report.results))
    ACCEPTANCE.append(f"criterion 10: {'PASS' if ok else 'FAIL'} findings carry computed and expected values, "
                      f"exit code {report.exit_code}")
    assert ok


def test_criterion_11_determinism():
    cfg = RunConfig(random_momenta=1, samples=4, seed=42)
    a, b = run(cfg, "*").to_json(), run(cfg, "*").to_json()
    ok = a.encode() == b.encode()
    ACCEPTANCE.append(f"criterion 11: {'PASS' if ok else 'FAIL'} identical configs give byte-identical reports")
    assert ok
