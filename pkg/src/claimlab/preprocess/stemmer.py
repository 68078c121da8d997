"""English Snowball (Porter2) stemmer.

The R1/R2 regions are tracked as suffix strings of the working word and
updated in lockstep with every edit. When a removed suffix reaches below
the start of a region, the region collapses to the replacement tail (or
to nothing), which is exactly how the widely used Python port behaves;
the bundled word/stem fixture was generated against that behaviour.
"""

from __future__ import annotations

_VOWELS = "aeiouy"
_DOUBLES = ("bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt")
_LI_ENDINGS = "cdeghkmnrt"

# Whole-word exceptional forms, applied before any suffix logic.
_SPECIAL = {
    "skis": "ski",
    "skies": "sky",
    "dying": "die",
    "lying": "lie",
    "tying": "tie",
    "idly": "idl",
    "gently": "gentl",
    "ugly": "ugli",
    "early": "earli",
    "only": "onli",
    "singly": "singl",
    "sky": "sky",
    "news": "news",
    "howe": "howe",
    "atlas": "atlas",
    "cosmos": "cosmos",
    "bias": "bias",
    "andes": "andes",
    "inning": "inning",
    "innings": "inning",
    "outing": "outing",
    "outings": "outing",
    "canning": "canning",
    "cannings": "canning",
    "herring": "herring",
    "herrings": "herring",
    "earring": "earring",
    "earrings": "earring",
    "proceed": "proceed",
    "proceeds": "proceed",
    "proceeded": "proceed",
    "proceeding": "proceed",
    "exceed": "exceed",
    "exceeds": "exceed",
    "exceeded": "exceed",
    "exceeding": "exceed",
    "succeed": "succeed",
    "succeeds": "succeed",
    "succeeded": "succeed",
    "succeeding": "succeed",
}

# Suffix tuples are ordered longest-first within each step so the first
# match is the longest one, as the algorithm requires.
_STEP0_SUFFIXES = ("'s'", "'s", "'")
_STEP1A_SUFFIXES = ("sses", "ied", "ies", "us", "ss", "s")
_STEP1B_SUFFIXES = ("eedly", "ingly", "edly", "eed", "ing", "ed")
_STEP2_SUFFIXES = (
    "ization",
    "ational",
    "fulness",
    "ousness",
    "iveness",
    "tional",
    "biliti",
    "lessli",
    "entli",
    "ation",
    "alism",
    "aliti",
    "ousli",
    "iviti",
    "fulli",
    "enci",
    "anci",
    "abli",
    "izer",
    "ator",
    "alli",
    "bli",
    "ogi",
    "li",
)
_STEP3_SUFFIXES = (
    "ational",
    "tional",
    "alize",
    "icate",
    "iciti",
    "ative",
    "ical",
    "ness",
    "ful",
)
_STEP4_SUFFIXES = (
    "ement",
    "ance",
    "ence",
    "able",
    "ible",
    "ment",
    "ant",
    "ent",
    "ism",
    "ate",
    "iti",
    "ous",
    "ive",
    "ize",
    "ion",
    "al",
    "er",
    "ic",
)

# suffix -> (chars to cut, text to append, R2 fallback when the cut
# reaches below the R2 start). A few rules cut fewer characters than the
# matched suffix length on purpose; region updates must mirror the cut,
# not the match, so the table stores the cut.
_STEP2_EDITS = {
    "ization": (7, "ize", ""),
    "ational": (7, "ate", "e"),
    "fulness": (4, "", ""),
    "ousness": (7, "ous", ""),
    "iveness": (7, "ive", "e"),
    "tional": (2, "", ""),
    "biliti": (6, "ble", ""),
    "lessli": (2, "", ""),
    "entli": (2, "", ""),
    "ation": (5, "ate", "e"),
    "alism": (5, "al", ""),
    "aliti": (5, "al", ""),
    "ousli": (5, "ous", ""),
    "iviti": (5, "ive", "e"),
    "fulli": (2, "", ""),
    "enci": (1, "e", ""),
    "anci": (1, "e", ""),
    "abli": (1, "e", ""),
    "izer": (4, "ize", ""),
    "ator": (4, "ate", "e"),
    "alli": (4, "al", ""),
    "bli": (3, "ble", ""),
    "ogi": (1, "", ""),
    "li": (2, "", ""),
}
_STEP3_EDITS = {
    "ational": (7, "ate", ""),
    "tional": (2, "", ""),
    "alize": (3, "", ""),
    "icate": (5, "ic", ""),
    "iciti": (5, "ic", ""),
    "ative": (5, "", ""),
    "ical": (4, "ic", ""),
    "ness": (4, "", ""),
    "ful": (3, "", ""),
}


def _regions(word: str) -> tuple[str, str]:
    """R1/R2 suffix strings, honouring the gener/commun/arsen prefixes."""
    if word.startswith(("gener", "commun", "arsen")):
        r1 = word[6:] if word.startswith("commun") else word[5:]
    else:
        r1 = ""
        for i in range(1, len(word)):
            if word[i] not in _VOWELS and word[i - 1] in _VOWELS:
                r1 = word[i + 1 :]
                break
    r2 = ""
    for i in range(1, len(r1)):
        if r1[i] not in _VOWELS and r1[i - 1] in _VOWELS:
            r2 = r1[i + 1 :]
            break
    return r1, r2


def _edit(
    word: str, r1: str, r2: str, cut: int, repl: str = "", r2_fallback: str = ""
) -> tuple[str, str, str]:
    """Cut `cut` chars off the tail, append `repl`, update both regions."""
    word = word[:-cut] + repl
    r1 = r1[:-cut] + repl if len(r1) >= cut else ""
    r2 = r2[:-cut] + repl if len(r2) >= cut else r2_fallback
    return word, r1, r2


def _ends_short_syllable(word: str) -> bool:
    """True when the word itself is a single short syllable."""
    if len(word) == 2:
        return word[0] in _VOWELS and word[1] not in _VOWELS
    return (
        len(word) >= 3
        and word[-1] not in _VOWELS
        and word[-1] not in "wxY"
        and word[-2] in _VOWELS
        and word[-3] not in _VOWELS
    )


def stem(word: str) -> str:
    """Return the stem of a single token (lowercased first)."""
    word = word.lower()
    if len(word) <= 2:
        return word
    if word in _SPECIAL:
        return _SPECIAL[word]

    for curly in ("’", "‘", "‛"):
        word = word.replace(curly, "'")
    if word.startswith("'"):
        word = word[1:]

    # Mark consonant-y as "Y" so vowel tests skip it; sequential update so
    # a fresh mark blocks the next position from seeing a vowel.
    chars = list(word)
    if chars and chars[0] == "y":
        chars[0] = "Y"
    for i in range(1, len(chars)):
        if chars[i] == "y" and chars[i - 1] in _VOWELS:
            chars[i] = "Y"
    word = "".join(chars)

    r1, r2 = _regions(word)

    # Step 0: possessive apostrophe forms.
    for suffix in _STEP0_SUFFIXES:
        if word.endswith(suffix):
            word, r1, r2 = _edit(word, r1, r2, len(suffix))
            break

    # Step 1a: plural-style s endings. "us"/"ss" match and do nothing,
    # which blocks the bare-s rule from firing on them.
    for suffix in _STEP1A_SUFFIXES:
        if word.endswith(suffix):
            if suffix == "sses":
                word, r1, r2 = _edit(word, r1, r2, 2)
            elif suffix in ("ied", "ies"):
                cut = 2 if len(word) > 4 else 1
                word, r1, r2 = _edit(word, r1, r2, cut)
            elif suffix == "s" and any(c in _VOWELS for c in word[:-2]):
                word, r1, r2 = _edit(word, r1, r2, 1)
            break

    # Step 1b: ed/ing endings with fix-up of the exposed stem.
    for suffix in _STEP1B_SUFFIXES:
        if word.endswith(suffix):
            if suffix in ("eed", "eedly"):
                if r1.endswith(suffix):
                    word, r1, r2 = _edit(word, r1, r2, len(suffix), "ee")
            elif any(c in _VOWELS for c in word[: -len(suffix)]):
                word, r1, r2 = _edit(word, r1, r2, len(suffix))
                if word.endswith(("at", "bl", "iz")):
                    word += "e"
                    r1 += "e"
                    if len(word) > 5 or len(r1) >= 3:
                        r2 += "e"
                elif word.endswith(_DOUBLES):
                    word, r1, r2 = _edit(word, r1, r2, 1)
                elif r1 == "" and _ends_short_syllable(word):
                    word += "e"
            break

    # Step 1c: trailing y after a non-initial consonant becomes i.
    if len(word) > 2 and word[-1] in "yY" and word[-2] not in _VOWELS:
        word = word[:-1] + "i"
        r1 = r1[:-1] + "i" if r1 else ""
        r2 = r2[:-1] + "i" if r2 else ""

    # Step 2: derivational endings, valid only inside R1.
    for suffix in _STEP2_SUFFIXES:
        if word.endswith(suffix):
            if r1.endswith(suffix):
                if suffix == "ogi":
                    if word[-4] == "l":
                        word, r1, r2 = _edit(word, r1, r2, 1)
                elif suffix == "li":
                    if word[-3] in _LI_ENDINGS:
                        word, r1, r2 = _edit(word, r1, r2, 2)
                else:
                    cut, repl, fallback = _STEP2_EDITS[suffix]
                    word, r1, r2 = _edit(word, r1, r2, cut, repl, fallback)
            break

    # Step 3: more derivational endings; "ative" additionally needs R2.
    for suffix in _STEP3_SUFFIXES:
        if word.endswith(suffix):
            if r1.endswith(suffix):
                if suffix == "ative":
                    if r2.endswith(suffix):
                        word, r1, r2 = _edit(word, r1, r2, 5)
                else:
                    cut, repl, fallback = _STEP3_EDITS[suffix]
                    word, r1, r2 = _edit(word, r1, r2, cut, repl, fallback)
            break

    # Step 4: residual suffixes, valid only inside R2.
    for suffix in _STEP4_SUFFIXES:
        if word.endswith(suffix):
            if r2.endswith(suffix):
                if suffix == "ion":
                    if word[-4] in "st":
                        word, r1, r2 = _edit(word, r1, r2, 3)
                else:
                    word, r1, r2 = _edit(word, r1, r2, len(suffix))
            break

    # Step 5: final e/l cleanup.
    if r2.endswith("l") and word[-2] == "l":
        word = word[:-1]
    elif r2.endswith("e"):
        word = word[:-1]
    elif r1.endswith("e"):
        if len(word) >= 4 and (
            word[-2] in _VOWELS
            or word[-2] in "wxY"
            or word[-3] not in _VOWELS
            or word[-4] in _VOWELS
        ):
            word = word[:-1]

    return word.replace("Y", "y")
