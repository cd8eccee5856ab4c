import mechlink.pulses
from mechlink.cli import main
from mechlink.selfcheck import check_cavity_hop_rate


def test_validate_command_passes_on_a_healthy_build(capsys):
    assert main(["validate"]) == 0
    lines = [line for line in capsys.readouterr().out.splitlines() if line]
    assert len(lines) == 6
    assert all(line.startswith("[PASS]") for line in lines)
    names = {line.split("]")[1].split(":")[0].strip() for line in lines}
    assert names == {
        "two_mode_rabi",
        "norm_conservation",
        "equal_rate_decay",
        "convergence_order",
        "cavity_hop_rate",
        "pulse_area_optimum",
    }


def test_corrupted_hop_factor_is_caught(monkeypatch):
    # the textbook single-factor coefficient must fail the exchange-rate check
    monkeypatch.setattr(
        mechlink.pulses, "effective_hop", lambda g, delta: g * g / delta
    )
    result = check_cavity_hop_rate()
    assert not result.passed
