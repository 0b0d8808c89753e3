"""Bidirectional Telex codec.

Telex encodes Vietnamese in plain ASCII: doubled letters and ``w`` carry
the letter modifiers (aa→â, ee→ê, oo→ô, aw→ă, ow→ơ, uw→ư, dd→đ) and a
trailing key carries the tone (s=acute, f=grave, r=hook, x=tilde,
j=dot-below).  ``to_keystrokes`` emits the canonical key sequence of a
syllable with the tone key directly after the tone-bearing vowel;
``compose`` replays a key sequence left to right, passing unmatched keys
through, so it is total on arbitrary letter strings.
"""

from __future__ import annotations

from .orthography import (
    MODIFIER_BASES,
    Modifier,
    Syllable,
    Tone,
    VOWEL_FORMS,
    VowelLetter,
    normalize,
    render,
)

TONE_KEYS = {
    Tone.SAC: "s",
    Tone.HUYEN: "f",
    Tone.HOI: "r",
    Tone.NGA: "x",
    Tone.NANG: "j",
}
KEY_TONES = {v: k for k, v in TONE_KEYS.items()}

# modifier trigger per base letter: circumflex doubles the base, breve/horn use w
_W_MODIFIER = {"a": Modifier.BREVE, "o": Modifier.HORN, "u": Modifier.HORN}


def _letter_keys(v: VowelLetter) -> str:
    if v.modifier is Modifier.CIRCUMFLEX:
        return v.base * 2
    if v.modifier in (Modifier.BREVE, Modifier.HORN):
        return v.base + "w"
    return v.base


def to_keystrokes(s: Syllable) -> str:
    """Canonical Telex key sequence for a syllable.

    The first key of each letter's emission mirrors the letter's case;
    modifier and tone keys are lowercase.
    """
    keys = []
    pos = 0  # surface position, for the case mask

    def emit(letter_keys: str):
        nonlocal pos
        if s.case_mask[pos]:
            letter_keys = letter_keys[0].upper() + letter_keys[1:]
        keys.append(letter_keys)
        pos += 1

    for ch in s.onset:
        emit("dd" if ch == "đ" else ch)
    prev: VowelLetter | None = None
    for k, v in enumerate(s.vowels):
        # a literal repeated plain vowel ("xoong") emits a doubled key so
        # that compose's revert rule restores the pair
        if prev == v and v.modifier is Modifier.NONE:
            emit(v.base * 2)
        else:
            emit(_letter_keys(v))
        if k == s.tone_index and s.tone is not Tone.NGANG:
            keys.append(TONE_KEYS[s.tone])
        prev = v
    for ch in s.coda:
        emit(ch)
    return "".join(keys)


def _vowel_form(ch: str) -> tuple[VowelLetter, Tone] | None:
    return VOWEL_FORMS.get(ch.lower())


def _recase(ch: str, upper: bool) -> str:
    return ch.upper() if upper else ch


def compose(keys: str) -> str:
    """Best-effort Vietnamese composition of a Telex key sequence.

    Applies modifier and tone keys to the immediately preceding letter,
    left to right; a repeated trigger reverts its own effect (ooo → oo,
    ddd → dd).  Keys that match nothing pass through unchanged, so the
    function is total and idempotent on trigger-free text.
    """
    out: list[str] = []
    for key in keys:
        k = key.lower()
        prev = out[-1] if out else ""
        prev_upper = prev.isupper()
        form = _vowel_form(prev) if prev else None

        if k in KEY_TONES and form is not None:
            letter, tone = form
            if tone is KEY_TONES[k]:  # repeated tone key reverts
                out[-1] = _recase(letter.render(Tone.NGANG), prev_upper)
                out.append(key)
            else:
                out[-1] = _recase(letter.render(KEY_TONES[k]), prev_upper)
        elif k == "d" and prev.lower() == "d":
            out[-1] = _recase("đ", prev_upper)
        elif k == "d" and prev.lower() == "đ":
            out[-1] = _recase("d", prev_upper)
            out.append(key)
        elif k in "aeo" and form is not None and form[0].base == k:
            letter, tone = form
            if letter.modifier is Modifier.NONE:
                out[-1] = _recase(VowelLetter(k, Modifier.CIRCUMFLEX).render(tone), prev_upper)
            elif letter.modifier is Modifier.CIRCUMFLEX:
                out[-1] = _recase(VowelLetter(k).render(tone), prev_upper)
                out.append(key)
            else:
                out.append(key)
        elif k == "w" and form is not None and form[0].base in _W_MODIFIER:
            letter, tone = form
            wanted = _W_MODIFIER[letter.base]
            if letter.modifier is Modifier.NONE:
                out[-1] = _recase(VowelLetter(letter.base, wanted).render(tone), prev_upper)
            elif letter.modifier is wanted:
                out[-1] = _recase(VowelLetter(letter.base).render(tone), prev_upper)
                out.append(key)
            else:
                out.append(key)
        else:
            out.append(key)
    return normalize("".join(out))


def word_to_keystrokes(word: str) -> str | None:
    """Canonical keystrokes of a surface word, None if it is not a syllable."""
    from .orthography import try_parse_syllable

    s = try_parse_syllable(word)
    return to_keystrokes(s) if s is not None else None
