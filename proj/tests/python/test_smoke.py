import json
from fractions import Fraction

import pytest

import cogfam

CLASS_I = [0, 0, 10, 0, 50]
CLASS_II = [0, 0, 0, 20, 40]
D1 = [6, 9, 11, 3, 1]
D2 = [5, 10, 13, 6, 1]


def test_equal_gpa_classes():
    assert cogfam.gpa_from_counts(CLASS_I) == Fraction(11, 3)
    assert cogfam.gpa_from_counts(CLASS_II) == Fraction(11, 3)
    result = cogfam.compare("Class I", CLASS_I, "Class II", CLASS_II)
    assert result["verdicts"]["GPA"] == ("Equivalent", "FullTie")
    for model in ("RFAM", "GRFAM", "TFAM", "TpFAM"):
        assert result["verdicts"][model] == ("FirstBetter", "TieHighRegion")
    assert result["fuzzy_internal"] and not result["gpa_vs_fuzzy"]


def test_departments():
    d1 = cogfam.assess("D1", D1)
    d2 = cogfam.assess("D2", D2)
    assert d1["cog"]["GRFAM"][0] == Fraction(229, 150)
    assert d2["cog"]["GRFAM"][0] == Fraction(83, 50)
    assert d2["classifications"]["GRFAM"] == "MoreThanSatisfactory"
    assert d2["classifications"]["RFAM"] == "LessThanSatisfactory"
    assert cogfam.rank({"D1": D1, "D2": D2}, "TpFAM") == [(1, "D2"), (2, "D1")]


def test_linkage_on_fractions():
    freqs = cogfam.frequencies_from_counts(D1)
    assert sum(freqs) == 1
    gpa = cogfam.gpa_from_frequencies(freqs)
    assert cogfam.rfam_cog(freqs)[0] == gpa + Fraction(1, 2)
    assert cogfam.variation_cog(freqs, "TFAM")[0] == Fraction(7, 10) * gpa + Fraction(1, 2)


def test_landmarks_and_oracle():
    assert cogfam.landmark_points("GRFAM") == {
        "worst": (Fraction(1, 2), Fraction(1, 2)),
        "minimum_y": (Fraction(19, 10), Fraction(1, 10)),
        "ideal": (Fraction(33, 10), Fraction(1, 2)),
    }
    ideal = [0, 0, 0, 0, 1]
    report = cogfam.verify_closed_form(ideal, "TFAM")
    assert report["y_ratio"] == Fraction(5, 3)
    assert report["deviations"][0]["expected"]
    x, y = cogfam.integration_centroid([Fraction(1, 5)] * 5, "GRFAM", 1000)
    assert x == pytest.approx(1.9, abs=1e-6) and y == pytest.approx(0.1, abs=1e-6)
    assert cogfam.composite_centroid(ideal, "TFAM") == (Fraction(33, 10), Fraction(1, 3))


def test_parsing_and_rendering():
    groups = cogfam.parse_counts("group,nF,nD,nC,nB,nA\nD1,6,9,11,3,1\nD2,5,10,13,6,1\n")
    assert groups == {"D1": D1, "D2": D2}
    assert cogfam.parse_scores("g,84\ng,85\n") == {"g": [0, 0, 0, 1, 1]}
    doc = json.loads(cogfam.render_report(groups, compare=True, format="json"))
    assert doc["comparison"]["verdicts"]["GPA"]["outcome"] == "SecondBetter"
    text = cogfam.render_report({"top": [0, 0, 0, 0, 4]})
    assert "GPA 4 (≈4.00)" in text and "RFAM (9/2, 1/2)" in text


def test_errors():
    with pytest.raises(cogfam.InputError):
        cogfam.assess("empty", [0, 0, 0, 0, 0])
    with pytest.raises(cogfam.ModelError):
        cogfam.variation_cog([1, 0, 0, 0, 0], "RFAM")
    with pytest.raises(ValueError, match="line 1"):
        cogfam.parse_scores("g,101\n")
