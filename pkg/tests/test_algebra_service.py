"""
AlgebraService 테스트 - ring/ideal/인증서 파일 형식
"""
import pytest

from gbverify.core.errors import FileFormatError
from gbverify.core.groebner import format_certificate
from gbverify.core.polyring import RingSpec
from gbverify.services.algebra_service import AlgebraService


@pytest.fixture
def algebra():
    return AlgebraService()


@pytest.mark.parametrize(
    "ring",
    [
        RingSpec.create(5, ("x", "y"), "lex"),
        RingSpec.create(3, ("s", "x", "y"), "grevlex"),
        RingSpec.create(3, ("x", "y"), "lex", parameter="s"),
        RingSpec.create(7, ("x", "y", "z"), "lex", priority=("z", "x", "y")),
    ],
)
def test_ring_text_round_trip(algebra, ring):
    text = algebra.format_ring(ring)
    assert algebra.parse_ring_text(text) == ring
    assert algebra.format_ring(algebra.parse_ring_text(text)) == text
    assert algebra.ring_from_mapping(algebra.ring_to_mapping(ring)) == ring


def test_ring_mapping_accepts_lists_and_strings(algebra):
    ring = algebra.ring_from_mapping({"characteristic": "5", "variables": "x, y", "order": "grevlex"})
    assert ring == RingSpec.create(5, ("x", "y"), "grevlex")
    assert algebra.ring_to_mapping(ring) == {
        "characteristic": 5,
        "parameters": [],
        "variables": ["x", "y"],
        "order": "grevlex",
        "priority": ["x", "y"],
    }
    with pytest.raises(FileFormatError, match="parameters|파라미터"):
        algebra.ring_from_mapping({"characteristic": 5, "variables": ["x"], "parameters": ["s", "t"]})


def test_ideal_text_round_trip(algebra):
    ring = RingSpec.create(3, ("x", "y"), "lex", parameter="s")
    ideal = algebra.parse_ideal_text("# 주석\ns*x^2 + x*y\n\n(s + 1)*y - 1  # 끝\n", ring)
    text = algebra.format_polys(ideal.generators)
    assert text == "s*x^2 + x*y\n(s + 1)*y - 1\n"
    again = algebra.parse_ideal_text(text, ring)
    assert again.generators == ideal.generators


def test_ideal_parse_error_names_line(algebra):
    ring = RingSpec.create(5, ("x", "y"), "lex")
    with pytest.raises(FileFormatError, match="i.ideal:3:"):
        algebra.parse_ideal_text("x\n\nx + z\n", ring, "i.ideal")


def test_read_certificates(algebra, tmp_path):
    ring = RingSpec.create(5, ("x", "y"), "lex")
    path = tmp_path / "c.cert"
    path.write_text("# 인증서\nS 0 1 : 1 -y ; 0 0\n\nS 1 2 : 0 x + 1\n", encoding="utf-8")
    certs = algebra.read_certificates(str(path), ring)
    assert [format_certificate(c) for c in certs] == ["S 0 1 : 1 -y", "S 1 2 : 0 x + 1"]
    path.write_text("S 0 1 : 1 -y\nS 0 1 : 1 w\n", encoding="utf-8")
    with pytest.raises(FileFormatError, match="c.cert:2:"):
        algebra.read_certificates(str(path), ring)


def test_resolve_by(algebra, tmp_path):
    ring = RingSpec.create(5, ("x", "y"), "lex")
    path = tmp_path / "m.ideal"
    path.write_text("x\ny\n", encoding="utf-8")
    assert len(algebra.resolve_by(ring, str(path)).generators) == 2
    assert [str(g) for g in algebra.resolve_by(ring, "x*y").generators] == ["x*y"]
