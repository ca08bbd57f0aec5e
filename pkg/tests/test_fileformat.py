import pytest

from padicrep import series as S
from padicrep.errors import ParseError
from padicrep.fileformat import (format_series, parse_series, read_bruhat, write_bruhat)
from padicrep.reps import Character, bruhat_split
from padicrep.series import TruncatedSeries


def test_format_omits_zeros():
    text = format_series(S.dirac(1, 5, 8))
    assert text == "PADIC-SERIES v1 p=5 backend=exact prec=20 trunc=8\n0: 1/1\n1: 1/1\n"


def test_approx_format():
    F = TruncatedSeries.from_values([5, 0, 7], 5, 3, "approx", 6)
    text = format_series(F)
    assert text.splitlines()[1:] == ["0: 1;1;6", "2: 0;7;6"]
    assert format_series(parse_series(text)) == text


@pytest.mark.parametrize("text", [
    "",
    "PADIC-SERIES v2 p=5 backend=exact prec=20 trunc=3\n",
    "PADIC-SERIES v1 p=5 backend=fast prec=20 trunc=3\n",
    "PADIC-SERIES v1 p=5 backend=exact prec=20 trunc=3\n4: 1/1\n",
    "PADIC-SERIES v1 p=5 backend=exact prec=20 trunc=3\n1: 1/1\n1: 2/1\n",
    "PADIC-SERIES v1 p=5 backend=exact prec=20 trunc=3\n1 1/1\n",
    "PADIC-SERIES v1 p=5 backend=exact prec=20 trunc=3\n1: 0;1;6\n",
    "PADIC-SERIES v1 p=5 backend=exact prec=20 trunc=3\n1: 1/0\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_series(text)


def test_bruhat_round_trip(tmp_path):
    chi = Character(2, -1)
    x = bruhat_split(S.dirac(3, 5, 8), S.log1p(5, 8), chi)
    write_bruhat(x, tmp_path / "pair")
    assert (tmp_path / "pair.chi").read_text() == "chi(2,-1)\n"
    y = read_bruhat(tmp_path / "pair")
    assert y.chi == chi and y.plus == x.plus and y.minus == x.minus
