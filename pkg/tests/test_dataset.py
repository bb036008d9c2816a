import pytest

from cbst.cgsm import cgsm_sorter
from cbst.chain import Chain
from cbst.dataset import generate, load, parse_distribution, save
from cbst.errors import DatasetError


def test_sorted_file_contents(tmp_path):
    path = tmp_path / "keys.txt"
    save(generate(7, 1, "sorted"), str(path))
    assert path.read_text() == "1\n2\n3\n4\n5\n6\n7\n"


def test_reversed_and_empty():
    assert generate(4, 0, "reversed").keys == [4, 3, 2, 1]
    assert generate(0, 0, "uniform").keys == []


def test_uniform_is_deterministic_and_distinct():
    first = generate(500, 42, "uniform")
    assert first.keys == generate(500, 42, "uniform").keys
    assert first.keys != generate(500, 43, "uniform").keys
    assert len(set(first.keys)) == 500
    assert first.seed == 42 and first.origin == "generated"


def test_same_seed_same_bytes(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    save(generate(300, 7, "runs(4)"), str(a))
    save(generate(300, 7, "runs(4)"), str(b))
    assert a.read_bytes() == b.read_bytes()


def test_runs_distribution():
    keys = generate(300, 5, "runs(3)").keys
    assert sorted(keys) == list(range(1, 301))
    kappa = cgsm_sorter.detect_runs(Chain.from_keys(keys)).kappa
    assert 80 <= kappa <= 100


@pytest.mark.parametrize(
    "text, expected",
    [("uniform", ("uniform", None)), ("runs(3)", ("runs", 3)), ("runs:8", ("runs", 8)), ("Sorted", ("sorted", None))],
)
def test_parse_distribution(text, expected):
    assert parse_distribution(text) == expected


@pytest.mark.parametrize("text", ["gaussian", "runs", "runs(0)"])
def test_parse_distribution_rejects(text):
    with pytest.raises(DatasetError):
        parse_distribution(text)


def test_load_skips_blank_lines(tmp_path):
    path = tmp_path / "keys.txt"
    path.write_text("3\n\n-1\n 7 \n")
    dataset = load(str(path))
    assert dataset.keys == [3, -1, 7]
    assert dataset.origin == "file"


def test_load_reports_line(tmp_path):
    path = tmp_path / "keys.txt"
    path.write_text("1\nabc\n3\n")
    with pytest.raises(DatasetError) as info:
        load(str(path))
    assert info.value.line == 2
    assert ":2:" in str(info.value)


def test_load_rejects_oversized_key(tmp_path):
    path = tmp_path / "keys.txt"
    path.write_text(f"{1 << 63}\n")
    with pytest.raises(DatasetError) as info:
        load(str(path))
    assert info.value.line == 1


def test_load_missing_file(tmp_path):
    with pytest.raises(DatasetError):
        load(str(tmp_path / "absent.txt"))


def test_load_rejects_invalid_utf8(tmp_path):
    path = tmp_path / "keys.txt"
    path.write_bytes(b"1\n\xff\xfe\n3\n")
    with pytest.raises(DatasetError) as info:
        load(str(path))
    assert info.value.line == 2


@pytest.mark.parametrize("text", ["1_000", "+5", "١٢", "0x10", "1.0"])
def test_load_accepts_only_plain_decimal(tmp_path, text):
    path = tmp_path / "keys.txt"
    path.write_text(f"4\n{text}\n", encoding="utf-8")
    with pytest.raises(DatasetError) as info:
        load(str(path))
    assert info.value.line == 2
