import pytest

from xmgraph.bridge import CASES, obstruction_certificate, verify_certificate
from xmgraph.errors import ValidationError
from xmgraph.graph import UNFIXED_LOOP, classify_arcs


@pytest.mark.parametrize("case", CASES)
@pytest.mark.parametrize("n", [2, 3])
def test_certificates_verify(case, n):
    cert = obstruction_certificate(case, n)
    assert cert.verified, cert.report()
    assert verify_certificate(cert)


def test_power_graph_witness():
    cert = obstruction_certificate("power-graph", 2)
    E = cert.exponential
    assert E.theory.monoid.maps[cert.witness_sigma] == (1, 0)
    assert len(cert.witness_orbit()) == 2
    assert "sigma: i = [t,s]" in cert.report()


def test_reflexive_witness_is_unfixed_loop():
    cert = obstruction_certificate("reflexive-power-graph", 2)
    E = cert.exponential
    assert E.size() == (2, 64)
    unfixed = [c.orbit for c in classify_arcs(E) if c.kind == UNFIXED_LOOP]
    assert len(unfixed) == 8
    assert cert.witness_orbit() in unfixed


def test_k_uniform_witness():
    cert = obstruction_certificate("k-uniform", 2)
    E = cert.exponential
    assert E.size() == (1, 1)
    assert len(set(E.inc[cert.witness_arc])) == 1


def test_tampered_certificate_fails():
    cert = obstruction_certificate("power-graph", 2)
    cert.witness_sigma = cert.exponential.theory.monoid.identity
    assert not verify_certificate(cert)
    assert any(line.startswith("[FAIL]") for line in cert.transcript)


def test_bad_arguments():
    with pytest.raises(ValidationError):
        obstruction_certificate("nope")
    with pytest.raises(ValidationError):
        obstruction_certificate("power-graph", 1)
