from __future__ import annotations

import json

import pytest

from qdivisible import fileio
from qdivisible.algebra import field_context
from qdivisible.cli import main
from qdivisible.constructions import direct_sum, lifted_mrd, spread
from qdivisible.subspaces import subspace_set

GF2 = field_context(2)


# ---------------------------------------------------------------------------
# file format

def test_round_trip_is_byte_exact(tmp_path):
    for s in (spread(2, 2, 3), lifted_mrd(3, 1, 1), spread(4, 1, 2)):
        path = tmp_path / "set.json"
        fileio.dump(s, path)
        loaded = fileio.load(path)
        assert loaded.members == s.members
        assert (loaded.ctx.q, loaded.v, loaded.k) == (s.ctx.q, s.v, s.k)
        again = tmp_path / "again.json"
        fileio.dump(loaded, again)
        assert path.read_bytes() == again.read_bytes()


def test_prime_entries_are_plain_ints():
    doc = fileio.to_jsonable(spread(2, 2, 2))
    assert doc["format"] == "subspace-set"
    assert doc["q"] == 2 and doc["v"] == 4 and doc["k"] == 2
    flat = [x for mat in doc["subspaces"] for row in mat for x in row]
    assert all(isinstance(x, int) for x in flat)


def test_extension_entries_are_digit_strings():
    gf4 = field_context(4)
    s = subspace_set(gf4, 2, 1, [[(1, 2)]])
    text = fileio.dumps(s)
    assert '"10"' in text  # the scalar x, most significant digit first
    loaded = fileio.loads(text)
    assert loaded.members[0].gen.rows == ((1, 2),)


def test_noncanonical_generators_load_to_canonical_form():
    doc = {
        "format": "subspace-set",
        "q": 2, "v": 3, "k": 2,
        "subspaces": [[[1, 1, 0], [0, 1, 1]]],
    }
    s = fileio.from_jsonable(doc)
    assert s.members[0].gen.rows == ((1, 0, 1), (0, 1, 1))
    # re-dumping writes the canonical matrix, not the original one
    redumped = json.loads(fileio.dumps(s))
    assert redumped["subspaces"] == [[[1, 0, 1], [0, 1, 1]]]


def test_malformed_documents_are_rejected():
    good = fileio.to_jsonable(spread(2, 2, 2))
    for mutate in (
        lambda d: d.update(format="other"),
        lambda d: d.update(q=6),
        lambda d: d["subspaces"][0][0].__setitem__(0, 7),
        lambda d: d["subspaces"][0].pop(),
        lambda d: d.update(subspaces=[]),
    ):
        doc = json.loads(json.dumps(good))
        mutate(doc)
        with pytest.raises(ValueError):
            fileio.from_jsonable(doc)


def test_gf4_digit_strings_are_validated():
    gf4 = field_context(4)
    base = fileio.to_jsonable(subspace_set(gf4, 2, 1, [[(1, 2)]]))
    for bad in ("7", "1", "102", "ab"):
        doc = json.loads(json.dumps(base))
        doc["subspaces"][0][0][1] = bad
        with pytest.raises(ValueError):
            fileio.from_jsonable(doc)


# ---------------------------------------------------------------------------
# command line

def test_cli_construct_verify_round_trip(tmp_path, capsys):
    out = tmp_path / "spread.json"
    assert main(["construct", "spread", "--q", "2", "--k", "2", "--s", "3",
                 "-o", str(out)]) == 0
    capsys.readouterr()
    assert main(["verify", "--r", "3", str(out)]) == 0
    text = capsys.readouterr().out
    assert "pairwise disjoint: yes" in text
    assert "hyperplane spectrum: {5: 63}" in text
    assert "divisibility exponent: 4" in text
    assert "classification: Spread (r=5)" in text
    assert "verified: yes" in text


def test_cli_verify_rejects_excessive_exponent(tmp_path, capsys):
    out = tmp_path / "spread.json"
    main(["construct", "spread", "--q", "2", "--k", "2", "--s", "2", "-o", str(out)])
    capsys.readouterr()
    assert main(["verify", "--r", "5", str(out)]) == 1
    assert "verified: no" in capsys.readouterr().out


def test_cli_verify_flags_overlapping_members(tmp_path, capsys):
    s = subspace_set(GF2, 4, 2, [
        [(1, 0, 0, 0), (0, 1, 0, 0)],
        [(1, 0, 0, 0), (0, 0, 1, 0)],
    ])
    path = tmp_path / "overlap.json"
    fileio.dump(s, path)
    assert main(["verify", "--r", "1", str(path)]) == 1
    text = capsys.readouterr().out
    assert "pairwise disjoint: NO" in text


def test_cli_construct_sum_matches_library(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    c = tmp_path / "c.json"
    main(["construct", "spread", "--q", "2", "--k", "2", "--s", "3", "-o", str(a)])
    main(["construct", "mrd", "--q", "2", "--k", "2", "--r", "3", "-o", str(b)])
    assert main(["construct", "sum", str(a), str(b), "-o", str(c)]) == 0
    capsys.readouterr()
    loaded = fileio.load(c)
    direct = direct_sum(spread(2, 2, 3), lifted_mrd(2, 2, 3))
    assert loaded.members == direct.members


def test_cli_construct_writes_to_stdout_by_default(capsys):
    assert main(["construct", "spread", "--q", "2", "--k", "2", "--s", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["format"] == "subspace-set"
    assert len(doc["subspaces"]) == 5


def test_cli_spectrum_text_lists_the_published_set(capsys):
    assert main(["spectrum", "--q", "2", "--k", "2", "--r", "3", "--nmax", "81"]) == 0
    out = capsys.readouterr().out
    assert ("admissible: {21, 31, 32, 33, 42, 43, 44, 52, 53, 54, 55, "
            "62, 63, 64, 65, 66, 72, 73, 74, 75, 76, 77, 78}") in out
    assert "largest excluded: 81" in out


def test_cli_spectrum_json_schema(capsys):
    assert main(["spectrum", "--q", "2", "--k", "2", "--r", "3", "--nmax", "40",
                 "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["command"] == "spectrum"
    assert doc["generators"] == [21, 32]
    assert doc["admissible"] == [21, 31, 32, 33]
    entry21 = doc["entries"][20]
    assert entry21["status"] == "Constructible"
    assert entry21["recipe"]["kind"] == "spread"
    entry22 = doc["entries"][21]
    assert entry22["status"] == "Excluded"
    assert entry22["reason"] == "AverageBound"
    assert entry22["witness"] == {"residue": 6}


def test_cli_bounds_text_and_json(capsys):
    assert main(["bounds", "--q", "2", "--d1", "2", "--d2", "5"]) == 0
    text = capsys.readouterr().out
    assert "u1 > 16" in text
    assert "u1 >= 21" in text
    assert main(["bounds", "--q", "2", "--d1", "2", "--d2", "5", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["case"] == "ii"
    assert doc["heden_bound"] == 16 and doc["heden_strict"] is True
    assert doc["improved_bound"] == 21 and doc["b_free_bound"] == 21


def test_cli_feasible_exit_codes(capsys):
    assert main(["feasible", "--q", "2", "--k", "2", "--r", "3",
                 "--n", "21", "--v", "6"]) == 0
    assert "certificate: a5=63 a13=0" in capsys.readouterr().out
    assert main(["feasible", "--q", "2", "--k", "2", "--r", "3",
                 "--n", "13", "--v", "6"]) == 1
    assert "phase-one optimum: 588/5" in capsys.readouterr().out
    assert main(["feasible", "--q", "2", "--k", "2", "--r", "3",
                 "--n", "21", "--v", "6", "--ilp", "--triples", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "feasible"
    assert doc["certificate"]["a5"] == 63


def test_cli_tau_exit_tracks_exclusion(capsys):
    assert main(["tau", "--q", "2", "--k", "2", "--r", "3", "--n", "24"]) == 1
    assert "<- excludes" in capsys.readouterr().out
    assert main(["tau", "--q", "2", "--k", "2", "--r", "3", "--n", "21"]) == 0
    assert "excluded: no" in capsys.readouterr().out
    assert main(["tau", "--q", "2", "--k", "2", "--r", "3", "--n", "24",
                 "--m", "3", "--json"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["table"] == [{"m": 3, "tau": -120}]


def test_cli_usage_errors_exit_two(tmp_path, capsys):
    assert main(["bounds", "--q", "2", "--d1", "5", "--d2", "3"]) == 2
    assert "error" in capsys.readouterr().err
    assert main(["verify", "--r", "3", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()
    assert main(["feasible", "--q", "2", "--k", "2", "--r", "3",
                 "--n", "21", "--v", "3"]) == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as err:
        main(["spectrum", "--q", "2"])
    assert err.value.code == 2
    with pytest.raises(SystemExit):
        main(["nonsense"])
