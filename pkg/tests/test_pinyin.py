import pytest

from mandarincs.domain.aggs import Syllable
from mandarincs.domain.constants import FINALS, INITIALS
from mandarincs.domain.errors import InvalidSyllableError, InvalidToneError, SegmentationError
from mandarincs.domain.pinyin import (
    iter_syllables,
    parse_syllable,
    parse_text,
    render_marked,
    render_syllable,
    segment,
    segment_spans,
    validate,
)


def test_inventory_sizes():
    assert len(INITIALS) == 21
    assert len(FINALS) == 36
    assert not set(INITIALS) & set(FINALS)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("song1shu3", ["song1", "shu3"]),
        ("xi'an1", ["xi", "an1"]),
        ("xian1", ["xian1"]),
        ("ni3 hao3", ["ni3", "hao3"]),
        ("Zhong1guo2", ["Zhong1", "guo2"]),
        ("", []),
    ],
)
def test_segment(syllabary, text, expected):
    assert segment(text, syllabary) == expected


def test_segment_keeps_offsets(syllabary):
    spans = segment_spans("ni3, hao3", syllabary)
    assert [(s.start, s.end) for s in spans] == [(0, 3), (5, 9)]


def test_segment_backtracks_when_longest_match_fails(syllabary):
    # "fang" leaves "uo", which is not a syllable on its own
    assert segment("fanguo", syllabary) == ["fan", "guo"]


def test_unsegmentable_run_names_span(syllabary):
    with pytest.raises(SegmentationError) as e:
        segment("ma1 xq1", syllabary)
    assert (e.value.start, e.value.end) == (4, 7)


@pytest.mark.parametrize(
    "raw, initial, final, tone, apical",
    [
        ("ma1", "m", "a", 1, "none"),
        ("kuai4", "k", "uai", 4, "none"),
        ("wai4", None, "uai", 4, "none"),
        ("jun1", "j", "ün", 1, "none"),
        ("shi4", "sh", "i", 4, "retroflex"),
        ("si1", "s", "i", 1, "dental"),
        ("ji1", "j", "i", 1, "none"),
        ("you3", None, "iou", 3, "none"),
        ("yue4", None, "üe", 4, "none"),
        ("ying1", None, "ing", 1, "none"),
        ("yu2", None, "ü", 2, "none"),
        ("wu3", None, "u", 3, "none"),
        ("liu2", "l", "iou", 2, "none"),
        ("gui4", "g", "uei", 4, "none"),
        ("lun2", "l", "uen", 2, "none"),
        ("er2", None, "er", 2, "none"),
    ],
)
def test_parse_syllable(syllabary, raw, initial, final, tone, apical):
    s = parse_syllable(raw, syllabary)
    assert (s.initial, s.final, s.tone, s.apical_variant) == (initial, final, tone, apical)
    assert s.source == raw


def test_wai_and_kuai_share_final(syllabary):
    assert parse_syllable("wai4", syllabary).final == parse_syllable("kuai4", syllabary).final


@pytest.mark.parametrize("raw", ["lü4", "lv4", "lu:4", "LÜ4", "lǜ"])
def test_u_umlaut_spellings(syllabary, raw):
    assert parse_syllable(raw, syllabary) == Syllable("l", "ü", 4)


def test_explicit_umlaut_after_palatals(syllabary):
    assert parse_syllable("jü1", syllabary) == parse_syllable("ju1", syllabary)


@pytest.mark.parametrize("raw", ["ma", "ma0", "ma5"])
def test_neutral_tone_spellings(syllabary, raw):
    assert parse_syllable(raw, syllabary).tone == 0


@pytest.mark.parametrize("marked, digits", [("mā", "ma1"), ("má", "ma2"), ("mǎ", "ma3"), ("mă", "ma3"), ("mà", "ma4")])
def test_tone_marks_match_digits(syllabary, marked, digits):
    assert parse_syllable(marked, syllabary) == parse_syllable(digits, syllabary)


@pytest.mark.parametrize("raw", ["ma6", "ma9", "mā2", "mǎà", "ma\u00b2"])
def test_bad_tones(syllabary, raw):
    with pytest.raises(InvalidToneError):
        parse_syllable(raw, syllabary)


@pytest.mark.parametrize("raw", ["bong1", "xq1", "nün2", "", "ma-1", "uo3", "in1", "yiou3", "wuo3", "wuai4", "yia1"])
def test_invalid_syllables(syllabary, raw):
    with pytest.raises(InvalidSyllableError):
        parse_syllable(raw, syllabary)


@pytest.mark.parametrize(
    "syllable, expected",
    [
        (Syllable("m", "a", 1), "ma1"),
        (Syllable(None, "uai", 4), "wai4"),
        (Syllable("l", "ü", 4), "lü4"),
        (Syllable("j", "ün", 1), "jun1"),
        (Syllable(None, "iou", 3), "you3"),
        (Syllable(None, "i", 0), "yi0"),
        (Syllable("l", "iou", 2), "liu2"),
    ],
)
def test_render_syllable(syllable, expected):
    assert render_syllable(syllable) == expected


@pytest.mark.parametrize(
    "syllable, expected",
    [
        (Syllable("m", "a", 3), "mǎ"),
        (Syllable("h", "ao", 3), "hǎo"),
        (Syllable("g", "ou", 3), "gǒu"),
        (Syllable("x", "ie", 4), "xiè"),
        (Syllable("l", "iou", 2), "liú"),
        (Syllable("g", "uei", 4), "guì"),
        (Syllable("l", "ü", 3), "lǚ"),
        (Syllable("m", "a", 0), "ma"),
    ],
)
def test_render_marked(syllable, expected):
    assert render_marked(syllable) == expected


def test_validate(syllabary):
    assert validate("k", "uai", syllabary)
    assert not validate("b", "ong", syllabary)
    assert validate(None, "er", syllabary)


def test_round_trip_over_syllabary(syllabary):
    syllables = list(iter_syllables(syllabary))
    assert len(syllables) == 5 * len(syllabary)
    for s in syllables:
        assert parse_syllable(render_syllable(s), syllabary) == s


def test_marked_round_trip_over_syllabary(syllabary):
    for s in iter_syllables(syllabary, tones=(1, 2, 3, 4)):
        assert parse_syllable(render_marked(s), syllabary) == s


def test_corpus_parses(corpus, syllabary):
    assert len(corpus) == 242
    for word in corpus:
        parsed = parse_text(word, syllabary)
        assert len(parsed) == 1
        s = parsed[0][1]
        assert validate(s.initial, s.final, syllabary)


def test_parse_text_reports_offset(syllabary):
    with pytest.raises(InvalidToneError) as e:
        parse_text("ni3 ma6", syllabary)
    assert e.value.offset == 4


def test_superscript_digit_is_a_tone_error(syllabary):
    with pytest.raises(InvalidToneError):
        parse_text("ma²", syllabary)


@pytest.mark.parametrize("raw, final", [("yi1", "i"), ("yin2", "in"), ("ying4", "ing"), ("wu3", "u"), ("you3", "iou")])
def test_standard_y_w_spellings(syllabary, raw, final):
    syllable = parse_syllable(raw, syllabary)
    assert (syllable.initial, syllable.final) == (None, final)
