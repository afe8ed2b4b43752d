from rodwheel import __version__
from rodwheel.cli import create_parser, main
from rodwheel.settings import get_debug


def test_version(capsys):
    actual = main(["--version"])

    assert actual == 0
    assert __version__ in capsys.readouterr().out


def test_missing_command(capsys):
    actual = main([])

    assert actual == 1


def test_unknown_command(capsys):
    actual = main(["fly"])

    assert actual == 1


def test_invalid_verbosity(capsys):
    actual = main(["-v", "3", "scenarios"])

    assert actual == 1


def test_debug_enables_timing(capsys):
    actual = main(["--debug", "scenarios"])

    assert actual == 0
    assert get_debug() is True


def test_subcommands():
    parser = create_parser()

    options = parser.parse_args(["sweep", "case1", "--param", "k_p", "--values", "1,2"])

    assert options.command == "sweep"
    assert options.param == "k_p"
    assert options.workers is None
