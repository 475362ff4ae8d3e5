import json

from prismforge.cli import main
from prismforge.records import read_checkpoint, read_lines


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_perfect_trapezium(capsys):
    code, out, _ = run(capsys, "verify", "--shape", "trapezium", "--sides", "364,275,320",
                       "--h", "240")
    assert code == 0 and "perfect" in out.lower()


def test_verify_near_miss_exit_one(capsys):
    code, _, _ = run(capsys, "verify", "--shape", "kite", "--sides", "100,208,252,160", "--h", "105")
    assert code == 1


def test_verify_bad_arity(capsys):
    code, _, _ = run(capsys, "verify", "--shape", "kite", "--sides", "1,2", "--h", "3")
    assert code == 2


def test_unknown_flag_exit_two(capsys):
    assert run(capsys, "search", "--bogus")[0] == 2


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "3")
    assert code == 0 and out.strip().endswith("10/10 PASS")


def test_curve_torsion(capsys):
    code, out, _ = run(capsys, "curve", "--transform", "sec2", "--xy", "2,3", "--action", "torsion")
    assert code == 0 and "Z2xZ4" in out


def test_curve_points_map(capsys):
    code, out, _ = run(capsys, "curve", "--transform", "sec2", "--xy", "5,2", "--action", "map",
                       "--point-bound", "100")
    assert code == 0 and "square=True" in out


def test_curve_singular(capsys):
    assert run(capsys, "curve", "--raw", "0,0,0")[0] == 1


def test_search_writes_records_and_checkpoint(tmp_path, capsys):
    out = tmp_path / "trap.ndjson"
    code, text, _ = run(capsys, "search", "--shape", "trapezium", "--height-max", "13",
                        "--output", str(out))
    assert code == 0 and "summary:" in text
    lines = read_lines(str(out))
    first = json.loads(lines[0])
    assert list(first)[:3] == ["shape", "lengths", "h"]
    assert any(json.loads(l)["lengths"]["x"] == 364 for l in lines)
    ck, output = read_checkpoint(str(out) + ".ckpt")
    assert ck.emitted_count == len(lines) and output == str(out)
    assert run(capsys, "fsck", str(out))[0] == 0


def test_search_resume_is_byte_identical(tmp_path, capsys):
    full, part = tmp_path / "full.ndjson", tmp_path / "part.ndjson"
    args = ("search", "--shape", "trapezium", "--height-max", "13")
    run(capsys, *args, "--output", str(full))
    run(capsys, *args, "--output", str(part), "--stop-after", "9")
    # simulate a crash that left a torn trailing line
    with open(part, "a") as fh:
        fh.write('{"shape":"trap')
    run(capsys, *args, "--output", str(part), "--resume")
    assert part.read_bytes() == full.read_bytes()


def test_resume_with_other_bounds_refused(tmp_path, capsys):
    out = tmp_path / "t.ndjson"
    run(capsys, "search", "--shape", "trapezium", "--height-max", "6", "--output", str(out),
        "--stop-after", "2")
    code, _, err = run(capsys, "search", "--shape", "trapezium", "--height-max", "7",
                       "--output", str(out), "--resume")
    assert code == 2


def test_search_no_records_exit_one(tmp_path, capsys):
    out = tmp_path / "r.ndjson"
    code, _, _ = run(capsys, "search", "--shape", "rhombus", "--strategy", "DIRECT",
                     "--height-max", "5", "--min-squares", "3", "--output", str(out))
    assert code == 1 and read_lines(str(out)) == []


def test_fsck_flags_tampered_record(tmp_path, capsys):
    out = tmp_path / "t.ndjson"
    run(capsys, "search", "--shape", "trapezium", "--height-max", "13", "--output", str(out))
    lines = read_lines(str(out))
    d = json.loads(lines[0])
    d["h"] = d["h"] + 1
    out.write_text(json.dumps(d) + "\n")
    code, text, _ = run(capsys, "fsck", str(out))
    assert code == 1 and "1 bad" in text
