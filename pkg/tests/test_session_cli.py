"""Session lifecycle, alternate units, and the command line front end."""

from reca.cli import main
from reca.session import Session, SessionConfig, run_deck

from conftest import run

FACTORIAL_DECK = [
    "* N'R",
    "(N,0L'/1',P'/1'-'R*,)'R",
    "('/5''R OX,)",
]


def write_deck(tmp_path, lines, name="test.deck"):
    path = tmp_path / name
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)


# library sessions


def test_definitions_persist_within_session():
    lines, status = run(["*(P*,)Q", "('/4'Q OX,)", "*('/5'Q OX,)"])
    assert status == 0
    assert "  1.60000E 01" in lines
    assert "  2.50000E 01" in lines


def test_on_line_reports_unit_numbers():
    seen = []
    run_deck(["*('/1'OX,)"], on_line=lambda unit, text: seen.append(unit))
    assert set(seen) == {3}


def test_punch_unit_collects_lines():
    sess, status = run_deck(["*O2(\"HELLO'X,)"])
    assert status == 0
    assert "HELLO" in sess.punch
    # nothing from the program body went to the printer
    assert all("HELLO" not in line for line in sess.output)


def test_keyboard_source_drives_session():
    lines = iter(["*('/3''/4'*OX,)"])

    def prompt():
        return next(lines, None)

    sess = Session(keyboard=prompt)
    assert sess.input_unit == 6
    status = sess.run()
    assert status == 0
    assert "  1.20000E 01" in sess.output


def test_echo_default_restored_each_cycle():
    # suppression requested by a deck lasts for one program only
    sess, status = run_deck(["*S ('/1'L,)", "*('/2'L,)"])
    joined = "\n".join(sess.output)
    assert "'/1'" not in joined
    assert "'/2'" in joined


def test_no_echo_config_applies_every_cycle():
    sess, status = run_deck(
        ["*('/1'OX,)", "*('/2'OX,)"], config=SessionConfig(echo=False)
    )
    assert "  1.00000E 00" in sess.output
    assert all("OX" not in line for line in sess.output)


def test_listing_always_config():
    sess, status = run_deck(["*(A,)Y"], config=SessionConfig(listing_always=True))
    assert "      0     -2      5      0      1" in sess.output


def test_run_deck_accepts_multiline_string():
    sess, status = run_deck("*('/2''/2'&OX,)\n")
    assert status == 0
    assert "  4.00000E 00" in sess.output


# command line front end


def test_cli_runs_deck_file(tmp_path, capsys):
    path = write_deck(tmp_path, FACTORIAL_DECK)
    assert main([path]) == 0
    out = capsys.readouterr().out
    assert "  1.20000E 02" in out


def test_cli_reports_diagnostics_in_status(tmp_path, capsys):
    path = write_deck(tmp_path, ["*(*,)"])
    assert main([path]) == 1
    assert "EXEC 02 EMPTY PUSHDOWN LIST" in capsys.readouterr().out


def test_cli_missing_deck_is_status_two(tmp_path, capsys):
    assert main([str(tmp_path / "absent.deck")]) == 2
    assert "cannot read deck" in capsys.readouterr().err


def test_cli_strict_charset_rejects_stray_characters(tmp_path, capsys):
    path = write_deck(tmp_path, ["*('/1'OX,) é"])
    assert main([path, "--strict-charset"]) == 2
    assert capsys.readouterr().err.startswith("reca:")


def test_cli_no_echo_flag(tmp_path, capsys):
    path = write_deck(tmp_path, ["*('/7'OX,)"])
    assert main([path, "--no-echo"]) == 0
    out = capsys.readouterr().out
    assert "  7.00000E 00" in out
    assert "OX" not in out


def test_cli_listing_always_flag(tmp_path, capsys):
    path = write_deck(tmp_path, ["*(A,)Y"])
    assert main([path, "--listing-always"]) == 0
    assert "      0     -2      5      0      1" in capsys.readouterr().out


def test_cli_punch_file(tmp_path, capsys):
    path = write_deck(tmp_path, ["*O2(\"CARD TEXT'X,)"])
    punch = tmp_path / "out.punch"
    assert main([path, "--punch", str(punch)]) == 0
    assert "CARD TEXT" in punch.read_text(encoding="utf-8")


def test_cli_max_steps_interrupts(tmp_path, capsys):
    path = write_deck(tmp_path, ["*((L.),)"])
    assert main([path, "--max-steps", "500"]) == 0
    assert "MANUAL INTERRUPT FROM SWITCH  5" in capsys.readouterr().out


def test_cli_width_eighty(tmp_path, capsys):
    # ten 13-character fields overflow an 80-column printer line
    path = write_deck(tmp_path, ["*S ($10$'/1'O L.,)"])
    assert main([path, "--width", "80"]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if "E 00" in l]
    assert all(len(l) <= 80 for l in lines)
    assert sum(l.count("E 00") for l in lines) == 10
