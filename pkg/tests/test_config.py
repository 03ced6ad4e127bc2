import pytest

from magnomech import ConfigError, baseline_params
from magnomech.config import (bundled_config_dir, bundled_config_names,
                              bundled_config_path, load_base_params,
                              load_params, load_sweep_spec, parse_kv)
from magnomech.params import TWO_PI, field_names


def write_params_config(path, params, **edits):
    lines = []
    for field in field_names():
        value = getattr(params, field)
        if field == "temperature":
            key = "temperature_k"
        else:
            key = f"{field}_hz"
            value = value / TWO_PI
        if key in edits:
            value = edits.pop(key)
        lines.append(f"{key} = {value!r}")
    for key, value in edits.items():
        lines.append(f"{key} = {value}")
    path.write_text("\n".join(lines) + "\n")
    return path


def test_parse_kv_comments_and_blanks():
    entries = parse_kv("# top comment\n\n a = 1 # inline\n b=two\n")
    assert entries == {"a": "1", "b": "two"}


@pytest.mark.parametrize("text", ["just words\n", "a =\n", "= 1\n", "a = 1\na = 2\n"])
def test_parse_kv_rejects_malformed_lines(text):
    with pytest.raises(ConfigError):
        parse_kv(text)


def test_params_round_trip(tmp_path):
    params = baseline_params(delta_m=-TWO_PI * 10e6, G_c=TWO_PI * 7e6)
    path = write_params_config(tmp_path / "p.cfg", params)
    loaded = load_params(path)
    for field in field_names():
        assert getattr(loaded, field) == pytest.approx(
            getattr(params, field), rel=1e-12, abs=1e-300)


def test_hz_values_are_converted_to_angular(tmp_path):
    path = write_params_config(tmp_path / "p.cfg", baseline_params(),
                               omega_1_hz=10e6)
    assert load_params(path).omega_1 == pytest.approx(TWO_PI * 10e6, rel=1e-12)


def test_unknown_key_rejected(tmp_path):
    path = write_params_config(tmp_path / "p.cfg", baseline_params(),
                               quality_factor="10")
    with pytest.raises(ConfigError, match="unknown"):
        load_params(path)


def test_missing_key_rejected(tmp_path):
    path = tmp_path / "p.cfg"
    path.write_text("omega_1_hz = 10e6\n")
    with pytest.raises(ConfigError, match="missing"):
        load_params(path)


def test_non_numeric_value_rejected(tmp_path):
    path = write_params_config(tmp_path / "p.cfg", baseline_params(),
                               kappa_hz="fast")
    with pytest.raises(ConfigError, match="not a number"):
        load_params(path)


def test_invalid_physical_value_becomes_config_error(tmp_path):
    path = write_params_config(tmp_path / "p.cfg", baseline_params(),
                               kappa_hz=-5.5e6)
    with pytest.raises(ConfigError):
        load_params(path)


def test_load_base_params_tolerates_sweep_keys():
    params = load_base_params(bundled_config_path("magnon_loss_gc040.cfg"))
    assert params.G_c == pytest.approx(TWO_PI * 4e6, rel=1e-12)
    assert params.delta_c == 0.0


def test_strict_loader_rejects_sweep_keys():
    with pytest.raises(ConfigError, match="unknown"):
        load_params(bundled_config_path("magnon_loss_gc040.cfg"))


class TestSweepSpecLoading:
    def test_bundled_two_axis_spec(self):
        spec = load_sweep_spec(bundled_config_path("coulomb_landscape_gc070.cfg"))
        assert [axis.param for axis in spec.axes] == ["delta_c", "g_m"]
        assert spec.axes[0].points == spec.axes[1].points == 100
        assert spec.axes[0].lo == pytest.approx(-TWO_PI * 20e6, rel=1e-12)
        assert spec.axes[1].hi == pytest.approx(TWO_PI * 25e6, rel=1e-12)
        assert spec.pair.labels() == ("m1", "m2")

    def test_temperature_axis_uses_kelvin_suffix(self):
        spec = load_sweep_spec(bundled_config_path("temp_line_gc090_gm11p3.cfg"))
        axis = spec.axes[0]
        assert axis.param == "temperature"
        assert axis.lo == 0.001 and axis.hi == 1.2

    def test_wrong_unit_suffix_rejected(self, tmp_path):
        path = write_params_config(
            tmp_path / "s.cfg", baseline_params(),
            axis1_param="temperature", axis1_min_hz="1", axis1_max_hz="2",
            axis1_points="3", pair="m1,m2")
        with pytest.raises(ConfigError, match="min_k"):
            load_sweep_spec(path)

    def test_missing_pair_rejected(self, tmp_path):
        path = write_params_config(
            tmp_path / "s.cfg", baseline_params(),
            axis1_param="delta_c", axis1_min_hz="0", axis1_max_hz="1e6",
            axis1_points="3")
        with pytest.raises(ConfigError, match="pair"):
            load_sweep_spec(path)

    def test_bad_pair_rejected(self, tmp_path):
        path = write_params_config(
            tmp_path / "s.cfg", baseline_params(),
            axis1_param="delta_c", axis1_min_hz="0", axis1_max_hz="1e6",
            axis1_points="3", pair="m1,laser")
        with pytest.raises(ConfigError):
            load_sweep_spec(path)

    def test_unknown_axis_param_rejected(self, tmp_path):
        path = write_params_config(
            tmp_path / "s.cfg", baseline_params(),
            axis1_param="frequency", axis1_min_hz="0", axis1_max_hz="1e6",
            axis1_points="3", pair="m1,m2")
        with pytest.raises(ConfigError, match="not a system parameter"):
            load_sweep_spec(path)

    def test_single_point_axis_allowed(self, tmp_path):
        path = write_params_config(
            tmp_path / "s.cfg", baseline_params(),
            axis1_param="delta_c", axis1_min_hz="1e6", axis1_max_hz="1e6",
            axis1_points="1", pair="m1,m2")
        spec = load_sweep_spec(path)
        assert spec.axes[0].values().tolist() == [pytest.approx(TWO_PI * 1e6)]

    def test_log_scale_axis(self, tmp_path):
        path = write_params_config(
            tmp_path / "s.cfg", baseline_params(),
            axis1_param="temperature", axis1_min_k="0.001", axis1_max_k="1.0",
            axis1_points="4", axis1_scale="log", pair="m1,m2")
        values = load_sweep_spec(path).axes[0].values()
        assert values[0] == pytest.approx(0.001) and values[-1] == pytest.approx(1.0)
        ratios = values[1:] / values[:-1]
        assert ratios == pytest.approx([10.0, 10.0, 10.0], rel=1e-9)

    def test_output_key_sets_output_path(self, tmp_path):
        path = write_params_config(
            tmp_path / "s.cfg", baseline_params(),
            axis1_param="delta_c", axis1_min_hz="0", axis1_max_hz="1e6",
            axis1_points="3", pair="m1,m2", output="table.csv")
        assert load_sweep_spec(path).output_path == "table.csv"


def test_all_bundled_configs_parse():
    names = bundled_config_names()
    assert len(names) >= 30
    for name in names:
        spec = load_sweep_spec(bundled_config_path(name))
        assert 1 <= len(spec.axes) <= 2


def test_bundled_config_path_rejects_unknown_name():
    with pytest.raises(ConfigError, match="no bundled config"):
        bundled_config_path("does_not_exist.cfg")


def test_bundled_config_dir_exists():
    assert bundled_config_dir().is_dir()
