from dualcalc.config import DEFAULT_LIMITS, ENV_FUEL, ENV_MAX_DEPTH, ENV_MAX_NODES, Limits


def test_environment_overrides_defaults():
    limits = Limits.from_env({ENV_FUEL: "50", ENV_MAX_NODES: " 300 ", ENV_MAX_DEPTH: "7"})
    assert (limits.fuel, limits.max_nodes, limits.max_depth) == (50, 300, 7)
    assert limits.max_traces == DEFAULT_LIMITS.max_traces


def test_invalid_environment_values_are_ignored():
    limits = Limits.from_env({ENV_FUEL: "lots", ENV_MAX_NODES: "-1", ENV_MAX_DEPTH: "0"})
    assert limits == DEFAULT_LIMITS


def test_reads_process_environment(monkeypatch):
    monkeypatch.setenv(ENV_FUEL, "12")
    assert Limits.from_env().fuel == 12


def test_command_line_values_win():
    limits = Limits.from_env({ENV_FUEL: "50"}).override(fuel=9, max_nodes=None)
    assert limits.fuel == 9
    assert limits.max_nodes == DEFAULT_LIMITS.max_nodes
    assert Limits().override() == Limits()
