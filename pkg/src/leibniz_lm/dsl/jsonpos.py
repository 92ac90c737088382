"""A JSON reader that remembers where every value starts.

The standard library decoder reports only the first error offset; the
definition format also needs the location of every value (for unresolved
references and dimension clashes) and the set of tokens that would have been
accepted at a syntax error.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass, field

__all__ = ["Diagnostic", "DocumentError", "read_json"]

MAX_DEPTH = 128

_NUMBER = re.compile(r"-?(?:0|[1-9][0-9]*)(\.[0-9]+)?([eE][+-]?[0-9]+)?")
_ESCAPES = {'"': '"', "\\": "\\", "/": "/", "b": "\b", "f": "\f", "n": "\n", "r": "\r", "t": "\t"}
_VALUE_START = ("{", "[", "string", "number", "true", "false", "null")


@dataclass(frozen=True)
class Diagnostic:
    """One problem found in a document; ``code`` is one of the stable classes
    ``syntax``, ``schema``, ``invalid-scalar``, ``duplicate-name``,
    ``unresolved-reference`` and ``dimension-clash``."""

    code: str
    message: str
    line: int
    column: int
    expected: tuple = field(default=())

    def __str__(self):
        text = f"{self.line}:{self.column}: {self.code}: {self.message}"
        if self.expected:
            text += " (expected one of: " + ", ".join(self.expected) + ")"
        return text


class DocumentError(ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.i = 0
        self.newlines = [m.start() for m in re.finditer("\n", text)]
        self.positions = {}

    def where(self, offset=None):
        offset = self.i if offset is None else offset
        line = bisect.bisect_left(self.newlines, offset)
        start = self.newlines[line - 1] + 1 if line else 0
        return line + 1, offset - start + 1

    def fail(self, message, expected=(), offset=None, code="syntax"):
        line, col = self.where(offset)
        raise DocumentError([Diagnostic(code, message, line, col, tuple(expected))])

    def skip(self):
        t, n = self.text, len(self.text)
        while self.i < n and t[self.i] in " \t\r\n":
            self.i += 1

    def peek(self):
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def value(self, path, depth):
        if depth > MAX_DEPTH:
            self.fail(f"nesting deeper than {MAX_DEPTH}")
        ch = self.peek()
        self.positions[path] = self.where()
        if ch == "{":
            return self.obj(path, depth)
        if ch == "[":
            return self.arr(path, depth)
        if ch == '"':
            return self.string()
        if ch == "-" or ch in "0123456789" and ch:
            return self.number()
        for word, val in (("true", True), ("false", False), ("null", None)):
            if self.text.startswith(word, self.i):
                self.i += len(word)
                return val
        found = repr(ch) if ch else "end of input"
        self.fail(f"unexpected {found}", _VALUE_START)

    def obj(self, path, depth):
        self.i += 1
        out = {}
        if self.peek() == "}":
            self.i += 1
            return out
        while True:
            if self.peek() != '"':
                self.fail("expected an object key", ("string", "}") if not out else ("string",))
            key_at = self.i
            key = self.string()
            if key in out:
                self.fail(f"duplicate key {key!r}", offset=key_at, code="duplicate-name")
            if self.peek() != ":":
                self.fail("expected ':' after object key", (":",))
            self.i += 1
            out[key] = self.value(path + (key,), depth + 1)
            ch = self.peek()
            if ch == ",":
                self.i += 1
                continue
            if ch == "}":
                self.i += 1
                return out
            self.fail("expected ',' or '}' in object", (",", "}"))

    def arr(self, path, depth):
        self.i += 1
        out = []
        if self.peek() == "]":
            self.i += 1
            return out
        while True:
            out.append(self.value(path + (len(out),), depth + 1))
            ch = self.peek()
            if ch == ",":
                self.i += 1
                continue
            if ch == "]":
                self.i += 1
                return out
            self.fail("expected ',' or ']' in array", (",", "]"))

    def string(self):
        t, n = self.text, len(self.text)
        self.i += 1
        parts = []
        while True:
            if self.i >= n:
                self.fail("unterminated string", ('"',))
            ch = t[self.i]
            if ch == '"':
                self.i += 1
                return "".join(parts)
            if ch == "\\":
                esc = t[self.i + 1 : self.i + 2]
                if esc in _ESCAPES:
                    parts.append(_ESCAPES[esc])
                    self.i += 2
                elif esc == "u":
                    hexdigits = t[self.i + 2 : self.i + 6]
                    if len(hexdigits) != 4 or not all(c in "0123456789abcdefABCDEF" for c in hexdigits):
                        self.fail("bad \\u escape", ("4 hex digits",))
                    parts.append(chr(int(hexdigits, 16)))
                    self.i += 6
                else:
                    self.fail("bad escape sequence", tuple(sorted(_ESCAPES)) + ("u",))
                continue
            if ord(ch) < 0x20:
                self.fail("control character in string")
            parts.append(ch)
            self.i += 1

    def number(self):
        m = _NUMBER.match(self.text, self.i)
        if m is None:
            self.fail("malformed number", ("digit",))
        if m.end() - m.start() > 1000:
            self.fail("number literal too long")
        self.i = m.end()
        if m.group(1) or m.group(2):
            return float(m.group(0))
        return int(m.group(0))


def read_json(text):
    """Parse ``text`` (``str`` or ``bytes``) into plain Python values.

    Returns ``(value, positions)`` where ``positions`` maps the key/index path
    of every value to its ``(line, column)``. Raises :class:`DocumentError`
    on any malformed input.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError([Diagnostic("syntax", f"input is not UTF-8 (byte {exc.start})", 1, 1)]) from None
    if not isinstance(text, str):
        raise DocumentError([Diagnostic("syntax", "document must be text", 1, 1)])
    if text.startswith("\ufeff"):
        text = text[1:]
    r = _Reader(text)
    value = r.value((), 0)
    if r.peek():
        r.fail("trailing data after the document", ("end of input",))
    return value, r.positions
