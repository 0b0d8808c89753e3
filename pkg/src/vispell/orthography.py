"""Vietnamese writing system: alphabet, tone marks, syllable structure.

Provides NFC normalization, syllable parsing/rendering and sentence
tokenization.  A written syllable decomposes into onset + vowel nucleus +
coda, with at most one tone mark sitting on one nucleus vowel.  Parsing
records the tone position explicitly so that ``render(parse(s)) == s``
holds byte-exactly, including for inputs using the older tone-placement
convention.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, replace
from enum import Enum


class Tone(Enum):
    NGANG = "ngang"  # no mark
    SAC = "sac"      # acute
    HUYEN = "huyen"  # grave
    HOI = "hoi"      # hook above
    NGA = "nga"      # tilde
    NANG = "nang"    # dot below


TONE_COMBINING = {
    Tone.NGANG: "",
    Tone.SAC: "́",
    Tone.HUYEN: "̀",
    Tone.HOI: "̉",
    Tone.NGA: "̃",
    Tone.NANG: "̣",
}


class Modifier(Enum):
    NONE = "none"
    CIRCUMFLEX = "circumflex"  # a^ e^ o^
    BREVE = "breve"            # a(
    HORN = "horn"              # o+ u+


MODIFIER_COMBINING = {
    Modifier.CIRCUMFLEX: "̂",
    Modifier.BREVE: "̆",
    Modifier.HORN: "̛",
}

# which base letters each modifier may attach to
MODIFIER_BASES = {
    Modifier.NONE: "aeiouy",
    Modifier.CIRCUMFLEX: "aeo",
    Modifier.BREVE: "a",
    Modifier.HORN: "ou",
}


class InvalidSyllable(ValueError):
    """Raised when a word is not a well-formed Vietnamese syllable."""


@dataclass(frozen=True)
class VowelLetter:
    base: str
    modifier: Modifier = Modifier.NONE

    def __post_init__(self):
        if self.base not in MODIFIER_BASES[Modifier.NONE]:
            raise InvalidSyllable(f"not a vowel base letter: {self.base!r}")
        if self.base not in MODIFIER_BASES[self.modifier]:
            raise InvalidSyllable(
                f"modifier {self.modifier.value} cannot attach to {self.base!r}"
            )

    def render(self, tone: Tone = Tone.NGANG) -> str:
        return unicodedata.normalize(
            "NFC",
            self.base + MODIFIER_COMBINING.get(self.modifier, "") + TONE_COMBINING[tone],
        )


def _build_vowel_forms() -> dict[str, tuple[VowelLetter, Tone]]:
    forms = {}
    for modifier, bases in MODIFIER_BASES.items():
        for base in bases:
            letter = VowelLetter(base, modifier)
            for tone in Tone:
                forms[letter.render(tone)] = (letter, tone)
    return forms


#: NFC vowel character -> (VowelLetter, Tone); covers all 72 written forms
VOWEL_FORMS = _build_vowel_forms()

CONSONANT_LETTERS = frozenset("bcdghklmnpqrstvxđ")  # includes đ

#: the 29 letters of the alphabet, lowercase base forms
ALPHABET = frozenset(CONSONANT_LETTERS) | {
    v.render() for v, t in VOWEL_FORMS.values() if t is Tone.NGANG
}

ONSETS = frozenset(
    [
        "", "b", "c", "ch", "d", "đ", "g", "gh", "gi", "h", "k", "kh", "l",
        "m", "n", "ng", "ngh", "nh", "p", "ph", "qu", "r", "s", "t", "th",
        "tr", "v", "x",
    ]
)

CODAS = frozenset(["", "c", "ch", "m", "n", "ng", "nh", "p", "t"])


def normalize(text: str) -> str:
    """Canonical-composition (NFC) normal form; idempotent, total."""
    return unicodedata.normalize("NFC", text)


def default_tone_index(vowels: tuple[VowelLetter, ...], coda: str) -> int:
    """Canonical tone position for a nucleus, new-style convention.

    The mark goes on the modified vowel when one exists (the last one for
    double-modified nuclei like ươ), else on the vowel before a coda, else
    on the first vowel of an open diphthong / the middle of an open
    triphthong.
    """
    modified = [k for k, v in enumerate(vowels) if v.modifier is not Modifier.NONE]
    if modified:
        return modified[-1]
    if coda:
        return len(vowels) - 1
    if len(vowels) >= 3:
        return 1
    return 0


@dataclass(frozen=True)
class Syllable:
    onset: str
    vowels: tuple[VowelLetter, ...]
    coda: str
    tone: Tone = Tone.NGANG
    tone_index: int = 0
    case_mask: tuple[bool, ...] = ()

    def __post_init__(self):
        if self.onset not in ONSETS:
            raise InvalidSyllable(f"illegal onset {self.onset!r}")
        if self.coda not in CODAS:
            raise InvalidSyllable(f"illegal coda {self.coda!r}")
        if not 1 <= len(self.vowels) <= 3:
            raise InvalidSyllable(f"nucleus must have 1-3 vowels, got {len(self.vowels)}")
        if not 0 <= self.tone_index < len(self.vowels):
            raise InvalidSyllable(f"tone_index {self.tone_index} out of range")
        n = len(self.onset) + len(self.vowels) + len(self.coda)
        if not self.case_mask:
            object.__setattr__(self, "case_mask", (False,) * n)
        elif len(self.case_mask) != n:
            raise InvalidSyllable("case_mask length does not match surface length")

    def __len__(self) -> int:
        return len(self.case_mask)


def render(s: Syllable) -> str:
    """Surface string of a syllable; inverse of parse_syllable."""
    parts = [s.onset]
    for k, v in enumerate(s.vowels):
        parts.append(v.render(s.tone if k == s.tone_index else Tone.NGANG))
    parts.append(s.coda)
    lower = "".join(parts)
    return "".join(
        ch.upper() if up else ch for ch, up in zip(lower, s.case_mask)
    )


def parse_syllable(word: str) -> Syllable:
    """Decompose one written syllable; raises InvalidSyllable otherwise.

    Fails on any character outside the 29-letter alphabet (plus tone
    marks), on illegal onsets/codas, on a missing nucleus and on more
    than one tone mark.
    """
    w = normalize(word)
    if not w:
        raise InvalidSyllable("empty string")
    case_mask = tuple(ch.isupper() for ch in w)
    lower = w.lower()

    for ch in lower:
        if ch not in VOWEL_FORMS and ch not in CONSONANT_LETTERS:
            raise InvalidSyllable(f"letter {ch!r} outside the alphabet")

    i = 0
    while i < len(lower) and lower[i] in CONSONANT_LETTERS:
        i += 1
    # gi- and qu- absorb a vowel letter into the onset when another
    # vowel follows ("già" = gi + à, but "gì" = g + ì)
    if (
        i + 1 < len(lower)
        and lower[:i + 1] in ("gi", "qu")
        and lower[i + 1] in VOWEL_FORMS
    ):
        i += 1
    onset = lower[:i]

    j = i
    while j < len(lower) and lower[j] in VOWEL_FORMS:
        j += 1
    nucleus, coda = lower[i:j], lower[j:]

    if not nucleus:
        raise InvalidSyllable(f"no vowel in {word!r}")
    if len(nucleus) > 3:
        raise InvalidSyllable(f"nucleus too long in {word!r}")
    if onset not in ONSETS:
        raise InvalidSyllable(f"illegal onset {onset!r} in {word!r}")
    if coda not in CODAS:
        raise InvalidSyllable(f"illegal coda {coda!r} in {word!r}")

    vowels = []
    tone, tone_index = Tone.NGANG, None
    for k, ch in enumerate(nucleus):
        letter, t = VOWEL_FORMS[ch]
        vowels.append(letter)
        if t is not Tone.NGANG:
            if tone is not Tone.NGANG:
                raise InvalidSyllable(f"two tone marks in {word!r}")
            tone, tone_index = t, k
    vowels = tuple(vowels)
    if tone_index is None:
        tone_index = default_tone_index(vowels, coda)

    return Syllable(onset, vowels, coda, tone, tone_index, case_mask)


def try_parse_syllable(word: str) -> Syllable | None:
    try:
        return parse_syllable(word)
    except InvalidSyllable:
        return None


@dataclass(frozen=True)
class Token:
    text: str
    syllable: Syllable | None = None

    @property
    def is_syllable(self) -> bool:
        return self.syllable is not None


def _make_token(text: str) -> Token:
    return Token(text, try_parse_syllable(text))


def split_tokens(text: str) -> tuple[list[Token], list[str]]:
    """Split NFC text into tokens plus the separators around them.

    Returns (tokens, seps) with len(seps) == len(tokens) + 1 so that
    seps[0] + tokens[0].text + seps[1] + ... + seps[-1] rebuilds the
    input exactly.  Leading/trailing punctuation of a whitespace chunk
    becomes its own token.
    """
    tokens: list[Token] = []
    seps: list[str] = []
    pos = 0
    pending = ""

    def emit(tok_text: str):
        nonlocal pending
        seps.append(pending)
        pending = ""
        tokens.append(_make_token(tok_text))

    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pending += text[pos]
            pos += 1
            continue
        start = pos
        while pos < n and not text[pos].isspace():
            pos += 1
        chunk = text[start:pos]
        a, b = 0, len(chunk)
        while a < b and not chunk[a].isalnum():
            a += 1
        while b > a and not chunk[b - 1].isalnum():
            b -= 1
        if a > 0:
            emit(chunk[:a])
        if b > a:
            emit(chunk[a:b])
        if b < len(chunk):
            emit(chunk[b:])
    seps.append(pending)
    return tokens, seps


def rebuild(token_texts: list[str], seps: list[str]) -> str:
    """Inverse of split_tokens for the token-text level."""
    out = [seps[0]]
    for text, sep in zip(token_texts, seps[1:]):
        out.append(text)
        out.append(sep)
    return "".join(out)


def tokenize_sentence(text: str) -> list[Token]:
    """Whitespace/punctuation-aware tokens of an NFC sentence."""
    tokens, _ = split_tokens(text)
    return tokens


def transfer_case(source: str, target: str) -> str:
    """Re-apply the capitalization pattern of ``source`` onto ``target``.

    Handles the common shapes (all-lower, Title, ALL-CAPS) and falls back
    to per-position transfer for mixed-case sources.
    """
    if not target:
        return target
    letters = [ch for ch in source if ch.isalpha()]
    if not letters or all(ch.islower() for ch in letters):
        return target
    if len(letters) > 1 and all(ch.isupper() for ch in letters):
        return target.upper()
    if letters[0].isupper() and all(ch.islower() for ch in letters[1:]):
        return target[0].upper() + target[1:]
    out = []
    for k, ch in enumerate(target):
        out.append(ch.upper() if k < len(source) and source[k].isupper() else ch)
    return "".join(out)
