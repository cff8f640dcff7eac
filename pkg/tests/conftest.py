import pytest

from permstego.alphabet import DEFAULT27

# A "top 15" gangster movie ranking as it would appear in a letter, plus the
# byte-wise lexicographic sort both parties can reconstruct. The presented
# ordering hides a message against that sorted baseline.
GANGSTER_MOVIES_PRESENTED = [
    "AMERICAN GANGSTER",
    "ONCE UPON A TIME IN AMERICA",
    "THE GODFATHER",
    "THE GODFATHER III",
    "CARLITO'S WAY",
    "THE UNTOUCHABLES",
    "GOODFELLAS",
    "GET CARTER",
    "WHITE HEAT",
    "KING OF NEW YORK",
    "PUBLIC ENEMY",
    "A BRONX TALE",
    "DONNIE BRASCO",
    "THE GODFATHER II",
    "SCARFACE",
]

GANGSTER_MOVIES_SORTED = [
    "A BRONX TALE",
    "AMERICAN GANGSTER",
    "CARLITO'S WAY",
    "DONNIE BRASCO",
    "GET CARTER",
    "GOODFELLAS",
    "KING OF NEW YORK",
    "ONCE UPON A TIME IN AMERICA",
    "PUBLIC ENEMY",
    "SCARFACE",
    "THE GODFATHER",
    "THE GODFATHER II",
    "THE GODFATHER III",
    "THE UNTOUCHABLES",
    "WHITE HEAT",
]

# Position of each presented item within the sorted baseline, and the value
# that code represents (both verified against an independent enumeration
# oracle before being frozen here).
GANGSTER_CODE = [1, 7, 10, 12, 2, 13, 5, 4, 14, 6, 8, 0, 3, 11, 9]
GANGSTER_VALUE = 128738347489
HIDDEN_TEXT = "bury him"


@pytest.fixture(scope="session")
def default27():
    return DEFAULT27
