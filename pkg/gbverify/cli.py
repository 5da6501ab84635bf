"""
gbverify 명령줄 - 커널 연산과 검증 하네스

종료 코드: 0 성공, 1 검증 실패 (계산 중 불변식 위반 포함), 2 사용법/파싱 오류
"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence

from .config import load_settings, setup_logging
from .core.errors import GbVerifyError, InternalConsistencyError
from .core.polyring import Polynomial, format_poly, parse_poly
from .services.service_manager import ServiceManager
from .verify import ConstructionParams, corpus_text, parse_pairs

logger = logging.getLogger("gbverify.cli")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class Output:
    """text / machine 출력 모드"""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    @property
    def machine(self) -> bool:
        return self.fmt == "machine"

    def write(self, text: str) -> None:
        self.stream.write(text if text.endswith("\n") or not text else text + "\n")

    def polys(self, key: str, polys: Sequence[Polynomial], extra: Optional[Dict[str, object]] = None) -> None:
        extra = extra or {}
        if self.machine:
            lines = [f"{k}={v}" for k, v in extra.items()]
            lines.append(f"count={len(polys)}")
            lines += [f"{key}.{i}={format_poly(f)}" for i, f in enumerate(polys)]
        else:
            lines = [format_poly(f) for f in polys]
            lines += [f"# {k}: {v}" for k, v in extra.items()]
        self.write("\n".join(lines))

    def value(self, key: str, value) -> None:
        self.write(f"{key}={value}" if self.machine else str(value))


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"정수 목록이어야 합니다: {text!r}")


def _bool(value: bool) -> str:
    return "true" if value else "false"


# ---------------------------------------------------------------------------
# 하위 명령
# ---------------------------------------------------------------------------

def cmd_gb(sm: ServiceManager, args, out: Output) -> int:
    ring = sm.algebra.read_ring(args.ring)
    gb = sm.algebra.groebner_basis(sm.algebra.read_ideal(args.ideal, ring))
    out.polys("basis", gb.elements)
    return EXIT_OK


def cmd_nf(sm: ServiceManager, args, out: Output) -> int:
    ring = sm.algebra.read_ring(args.ring)
    ideal = sm.algebra.read_ideal(args.ideal, ring)
    out.value("remainder", format_poly(sm.algebra.normal_form(ideal, parse_poly(args.poly, ring))))
    return EXIT_OK


def cmd_member(sm: ServiceManager, args, out: Output) -> int:
    ring = sm.algebra.read_ring(args.ring)
    ideal = sm.algebra.read_ideal(args.ideal, ring)
    member, cofactors = sm.algebra.membership(ideal, parse_poly(args.poly, ring), args.certificate)
    out.value("member", _bool(member))
    if cofactors is not None:
        if out.machine:
            out.write("\n".join(f"cofactor.{i}={format_poly(c)}" for i, c in enumerate(cofactors)))
        else:
            out.write("\n".join(f"  [{i}] {format_poly(c)}" for i, c in enumerate(cofactors)))
    return EXIT_OK


def cmd_colon(sm: ServiceManager, args, out: Output) -> int:
    ring = sm.algebra.read_ring(args.ring)
    result = sm.algebra.colon(sm.algebra.read_ideal(args.ideal, ring), sm.algebra.resolve_by(ring, args.by))
    out.polys("basis", result.reduced_gb())
    return EXIT_OK


def cmd_sat(sm: ServiceManager, args, out: Output) -> int:
    ring = sm.algebra.read_ring(args.ring)
    result, steps = sm.algebra.saturation(sm.algebra.read_ideal(args.ideal, ring), sm.algebra.resolve_by(ring, args.by))
    out.polys("basis", result.reduced_gb(), {"steps": steps})
    return EXIT_OK


def cmd_intersect(sm: ServiceManager, args, out: Output) -> int:
    ring = sm.algebra.read_ring(args.ring)
    a = sm.algebra.read_ideal(args.ideal_a, ring)
    b = sm.algebra.read_ideal(args.ideal_b, ring)
    out.polys("basis", sm.algebra.intersection(a, b).reduced_gb())
    return EXIT_OK


def cmd_frob(sm: ServiceManager, args, out: Output) -> int:
    ring = sm.algebra.read_ring(args.ring)
    out.polys("generator", sm.algebra.frobenius(sm.algebra.read_ideal(args.ideal, ring), args.q).generators)
    return EXIT_OK


def cmd_h0len(sm: ServiceManager, args, out: Output) -> int:
    ring = sm.algebra.read_ring(args.ring)
    U = sm.algebra.read_ideal(args.ideal_u, ring)
    J = sm.algebra.read_ideal(args.ideal_j, ring)
    m = sm.algebra.read_ideal(args.max, ring) if args.max else None
    out.value("length", sm.algebra.h0_length(U, J, m))
    return EXIT_OK


def cmd_rjj(sm: ServiceManager, args, out: Output) -> int:
    ring = sm.algebra.read_ring(args.ring)
    J = sm.algebra.read_ideal(args.J, ring)
    I = sm.algebra.read_ideal(args.I, ring)
    m = sm.algebra.read_ideal(args.max, ring) if args.max else None
    rel = sm.algebra.read_ideal(args.relations, ring) if args.relations else None
    rows = sm.algebra.rjj(J, I, args.d, args.q, m, rel, sm.settings.budget)
    if out.machine:
        lines = [f"d={args.d}", f"rows={len(rows)}", f"requested={len(args.q)}"]
        lines += [f"row.{i}={r.q} {r.length} {r.normalized}" for i, r in enumerate(rows)]
    else:
        lines = [f"({r.q}, {r.length}, {r.normalized})" for r in rows]
        if len(rows) < len(args.q):
            lines.append(f"# 시간 예산으로 {len(rows)}/{len(args.q)} 개의 q 만 계산했습니다")
    out.write("\n".join(lines))
    return EXIT_OK


def _grid(ps: List[int], others: List[int], skip_divisible: bool) -> List[tuple]:
    points = [(p, k) for p in ps for k in others]
    if skip_divisible and len(points) > 1:
        kept = [(p, k) for p, k in points if k % p]
        for p, k in sorted(set(points) - set(kept)):
            logger.info(f"p={p} 가 m={k} 을 나누므로 건너뜁니다")
        return kept
    return points


def _reports(reports, out: Output) -> int:
    out.write("\n".join(r.render(out.fmt) for r in reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_verify_construction(sm: ServiceManager, args, out: Output) -> int:
    return _reports(sm.verification.run_construction(_grid(args.p, args.m, True)), out)


def cmd_verify_example(sm: ServiceManager, args, out: Output) -> int:
    return _reports(sm.verification.run_example(_grid(args.p, args.e, False)), out)


def cmd_certs(sm: ServiceManager, args, out: Output) -> int:
    if args.check:
        report = sm.verification.run_certificate_list(
            args.p, args.m, lambda ring: sm.algebra.read_certificates(args.check, ring), args.basis
        )
        return _reports([report], out)
    if args.emit:
        out.write(corpus_text(ConstructionParams(args.p, args.m)))
        return EXIT_OK
    pairs = parse_pairs(args.pairs) if args.pairs else None
    return _reports([sm.verification.run_certificates(args.p, args.m, pairs)], out)


# ---------------------------------------------------------------------------
# 파서
# ---------------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default=argparse.SUPPRESS,
                        help="출력 형식 (기본값: text)")
    common.add_argument("--log-level", default=argparse.SUPPRESS, help="GBVERIFY_LOG_LEVEL 대신 사용")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS, help="GBVERIFY_WORKERS 대신 사용")
    common.add_argument("--budget", type=float, default=argparse.SUPPRESS,
                        help="q 격자 시간 예산(초), 0 이면 제한 없음")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="gbverify", description="Gröbner 기저 기반 아이디얼 연산과 검증 하네스", parents=[common]
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.set_defaults(handler=fn)
        return p

    p = add("gb", cmd_gb, "기약 Gröbner 기저")
    p.add_argument("ring")
    p.add_argument("ideal")

    p = add("nf", cmd_nf, "정규형 (나머지)")
    p.add_argument("ring")
    p.add_argument("ideal")
    p.add_argument("--poly", required=True)

    p = add("member", cmd_member, "아이디얼 소속 판정")
    p.add_argument("ring")
    p.add_argument("ideal")
    p.add_argument("--poly", required=True)
    p.add_argument("--certificate", action="store_true", help="생성원 계수도 출력")

    p = add("colon", cmd_colon, "몫 아이디얼 (I : by)")
    p.add_argument("ring")
    p.add_argument("ideal")
    p.add_argument("--by", required=True, help="다항식 또는 ideal 파일")

    p = add("sat", cmd_sat, "포화 (I : by^∞)")
    p.add_argument("ring")
    p.add_argument("ideal")
    p.add_argument("--by", required=True, help="다항식 또는 ideal 파일")

    p = add("intersect", cmd_intersect, "교집합")
    p.add_argument("ring")
    p.add_argument("ideal_a")
    p.add_argument("ideal_b")

    p = add("frob", cmd_frob, "Frobenius 괄호 거듭제곱 I^[q]")
    p.add_argument("ring")
    p.add_argument("ideal")
    p.add_argument("--q", type=int, required=True)

    p = add("h0len", cmd_h0len, "len H^0_m(U/J)")
    p.add_argument("ring")
    p.add_argument("ideal_u")
    p.add_argument("ideal_j")
    p.add_argument("--max", help="극대 아이디얼 파일 (기본값: 모든 변수)")

    p = add("rjj", cmd_rjj, "유한 q 상대 중복도 표")
    p.add_argument("ring")
    p.add_argument("--J", required=True)
    p.add_argument("--I", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=_int_list, required=True, help="예: 3,9")
    p.add_argument("--max", help="극대 아이디얼 파일 (기본값: 모든 변수)")
    p.add_argument("--relations", help="두 괄호 거듭제곱에 더할 초곡면 관계식 파일")

    p = add("verify-construction", cmd_verify_construction, "Construction 항목 검증")
    p.add_argument("--p", type=_int_list, required=True, help="소수 (쉼표로 여러 개)")
    p.add_argument("--m", type=_int_list, required=True, help="m >= 4 (쉼표로 여러 개)")

    p = add("verify-example", cmd_verify_example, "Example 검증")
    p.add_argument("--p", type=_int_list, required=True, help="홀수 소수 (쉼표로 여러 개)")
    p.add_argument("--e", type=_int_list, required=True, help="e >= 1 (쉼표로 여러 개)")

    p = add("certs", cmd_certs, "S-다항식 인증서 확인")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--pairs", help="예: 0,1;0,2;6,7 (기본값: 전부)")
    p.add_argument("--emit", action="store_true", help="인증서를 텍스트 형식으로 출력")
    p.add_argument("--check", help="인증서 파일을 읽어 확인")
    p.add_argument("--basis", choices=("F", "G"), default="F", help="--check 대상 기저 (기본값: F)")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(getattr(args, "format", "text"))
    sm: Optional[ServiceManager] = None
    try:
        settings = load_settings().override(
            log_level=getattr(args, "log_level", None) and args.log_level.upper(),
            workers=getattr(args, "workers", None),
            time_budget=getattr(args, "budget", None),
        )
        setup_logging(settings.log_level)
        sm = ServiceManager(settings)
        sm.initialize_sync()
        return args.handler(sm, args, out)
    except InternalConsistencyError as e:
        # 입력은 통과했고 계산이 어긋났으므로 검증 실패로 봅니다
        logger.error("계산 불변식 위반: %s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    except GbVerifyError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if sm is not None:
            sm.cleanup_sync()


if __name__ == "__main__":
    sys.exit(main())
