import io
import json

import pytest

from gammalab.cli import FieldCache, RunConfig, load_config, main, parse_field
from gammalab.abelian import AbelianField
from gammalab.numfield import NumberField


def run(*argv, cache=None):
    out = io.StringIO()
    args = list(argv) + ["--deterministic"] + (["--cache-dir", str(cache)] if cache else ["--no-cache"])
    code = main(args, stdout=out)
    return code, out.getvalue()


def run_json(*argv, cache=None):
    code, text = run(*argv, "--format", "json", cache=cache)
    return code, json.loads(text)


def test_tower_build_text():
    code, text = run("tower", "build", "--stages", "3")
    assert code == 0
    lines = text.splitlines()[1:]
    assert [ln.split()[:3] for ln in lines] == [["2", "3", "3"], ["3", "7", "49"], ["5", "11", "14641"]]
    assert all(ln.endswith("≤ 3: yes") for ln in lines)
    assert "11^(4/25)" in lines[2]


def test_gamma_shortcuts():
    code, text = run("gamma", "--M", "sqrt2", "--F", "sqrt3")
    assert code == 0 and text == "2^(1/2) ≈ 1.41421356\n"
    code, text = run("gamma", "--M", "poly=-2,0,1", "--F", "poly=-3,0,1")
    assert text == "2^(1/2) ≈ 1.41421356\n"


def test_json_schema():
    code, doc = run_json("gamma-prime", "--M", "m=24;H={1,23}")
    assert code == 0
    assert set(doc) == {"schema", "command", "config_digest", "refs", "results", "failures"}
    assert doc["schema"] == 1 and doc["results"]["sup"] == "2^(1/2)*3^(1/8)"
    assert doc["results"]["sup_witness"] == "m=1;H={1}"


def test_timestamp_only_without_deterministic():
    out = io.StringIO()
    main(["gamma", "--M", "sqrt2", "--F", "sqrt3", "--no-cache", "--format", "json"], stdout=out)
    assert "generated_at" in json.loads(out.getvalue())


def test_heights_enumerate_csv():
    code, text = run("heights", "enumerate", "--degree", "1", "--bound", "0.6931", "--format", "csv")
    assert code == 0
    assert len(text.splitlines()) == 4


def test_heights_probe_json():
    code, doc = run_json("heights", "probe", "--field", "sqrt2", "--bound", "0.1")
    assert doc["results"]["min_height"] == "none below B"


def test_verify_and_exit_codes():
    code, doc = run_json("verify", "disjoint-meet", "--trials", "10", "--seed", "4")
    assert code == 0 and doc["results"]["passed"] == 10
    assert run("field", "info", "bogus")[0] == 2
    assert run("gamma-prime", "--M", "zeta7", "--subgroup-cap", "1")[0] == 3
    assert run("tower", "scan", "--stages", "3", "--subset-cap", "2")[0] == 3
    assert run("verify", "nonsense")[0] == 2
    assert run("gamma-prime", "--M", "sqrt2", "--K", "sqrt3")[0] == 2


def test_field_info(tmp_path):
    code, doc = run_json("field", "info", "cyclic11_5", cache=tmp_path)
    assert doc["results"]["disc"] == "14641" and doc["results"]["generator"] == "1,3,-3,-4,1,1"
    code, doc = run_json("field", "info", "poly=-5,0,1", cache=tmp_path)
    assert doc["results"]["basis_denominators"] == [1, 2] and doc["results"]["index"] == 2


def test_cache_hit_and_audit(tmp_path):
    first = run("field", "info", "zeta12", cache=tmp_path)
    assert len(list(tmp_path.glob("*.json"))) == 1
    assert run("field", "info", "zeta12", cache=tmp_path) == first
    code, doc = run_json("cache", "audit", cache=tmp_path)
    assert code == 0 and doc["results"] == {"checked": 1, "mismatches": 0, "repaired": []}


def test_corrupt_entry_is_recomputed(tmp_path, caplog):
    run("field", "info", "sqrt5", cache=tmp_path)
    (entry,) = tmp_path.glob("*.json")
    entry.write_text("{not json")
    code, text = run("field", "info", "sqrt5", cache=tmp_path)
    assert code == 0 and "disc: 5" in text
    assert "corrupt" in caplog.text
    assert json.loads(entry.read_text())["disc"] == "5"


def test_audit_repairs_tampered_entry(tmp_path):
    run("field", "info", "sqrt5", cache=tmp_path)
    (entry,) = tmp_path.glob("*.json")
    data = json.loads(entry.read_text())
    data["disc"] = "7"
    entry.write_text(json.dumps(data))
    code, doc = run_json("cache", "audit", cache=tmp_path)
    assert doc["results"]["mismatches"] == 1
    assert json.loads(entry.read_text())["disc"] == "5"


def test_unwritable_cache_is_exit_5(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    cache = FieldCache(tmp_path / "c")
    cache.dir = blocker / "sub"
    with pytest.raises(Exception):
        cache.store({"key": "Q", "degree": 1, "disc": "1", "basis_denominators": []})


def test_config_precedence(tmp_path):
    cfg_file = tmp_path / "gl.toml"
    cfg_file.write_text("degree_cap = 12\nscreen_size = 30\n")
    env = {"GAMMALAB_DEGREE_CAP": "8", "GAMMALAB_SCREEN_SIZE": "20", "GAMMALAB_SEED": "9"}
    cfg = load_config({"screen_size": 40}, str(cfg_file), env)
    assert (cfg.degree_cap, cfg.screen_size, cfg.seed) == (12, 40, 9)
    assert load_config({}, None, {}).degree_cap == 24
    with pytest.raises(ValueError):
        load_config({"degree_cap": 0}, None, {})


def test_parse_field_forms():
    cfg = RunConfig()
    assert parse_field("sqrt-3", cfg) == parse_field("sqrtm3", cfg) == parse_field("m=3;H={1}", cfg)
    assert isinstance(parse_field("zeta7", cfg), AbelianField)
    assert isinstance(parse_field("poly=1,0,-2".replace("1,0,-2", "-2,0,1"), cfg), NumberField)
