"""
多项式文本格式

语法（空白无关）：
    poly   := term ("+" term)*  |  "0"
    term   := "1" | factor ("*" factor)*
    factor := "w" <index> ["^" <exp>]

format_polynomial 按环的单项式序降序输出各项，因子按变量下标升序，
指数 1 省略；零多项式输出 "0"。parse(format(p)) == p。
"""

from typing import List, Tuple

from .polynomial import PolynomialF2
from .ring import ExponentOverflowError, F2PolyError, Monomial, PolyRing


class PolynomialSyntaxError(F2PolyError, ValueError):
    """文本语法错误"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (位置 {position})")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "输入结束"
            raise PolynomialSyntaxError(f"期望 '{ch}'，得到 '{found}'", self.pos)
        self.pos += 1

    def number(self) -> Tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise PolynomialSyntaxError("期望整数", start)
        return int(self.text[start:self.pos]), start


def _parse_term(scanner: _Scanner, ring: PolyRing) -> int:
    scanner.skip_ws()
    start = scanner.pos
    if scanner.peek() == "1":
        value, at = scanner.number()
        if value != 1:
            raise PolynomialSyntaxError(f"非法常数项 {value}", at)
        return 0
    exps = [0] * ring.variables.nvars
    while True:
        scanner.expect("w")
        index, at = scanner.number()
        if not 2 <= index <= ring.k:
            raise PolynomialSyntaxError(f"未知变量 w{index}（k={ring.k}）", at)
        exponent = 1
        if scanner.peek() == "^":
            scanner.pos += 1
            exponent, _ = scanner.number()
        exps[index - 2] += exponent
        if scanner.peek() != "*":
            break
        scanner.pos += 1
    try:
        return ring.pack(exps)
    except ExponentOverflowError as e:
        raise PolynomialSyntaxError(str(e), start) from e


def parse(text: str, ring: PolyRing) -> PolynomialF2:
    """解析多项式文本"""
    scanner = _Scanner(text)
    if scanner.peek() == "0":
        _, at = scanner.number()
        if scanner.text[at:scanner.pos] != "0":
            raise PolynomialSyntaxError(f"非法常数 {scanner.text[at:scanner.pos]}", at)
        if scanner.peek():
            raise PolynomialSyntaxError("'0' 之后不能再有内容", scanner.pos)
        return PolynomialF2.zero(ring)

    keys: List[int] = [_parse_term(scanner, ring)]
    while scanner.peek() == "+":
        scanner.pos += 1
        keys.append(_parse_term(scanner, ring))
    if scanner.peek():
        raise PolynomialSyntaxError(f"多余字符 '{scanner.peek()}'", scanner.pos)
    return PolynomialF2(ring, keys)


def format_monomial(monomial: Monomial) -> str:
    return str(monomial)


def format_polynomial(p: PolynomialF2) -> str:
    if p.is_zero():
        return "0"
    return " + ".join(str(p.ring.to_monomial(t)) for t in p.terms)
