import pytest

# Reference values computed with mpmath at 40 digits, independent of the package:
# roots of sin(s) - cos(s) tanh(s) by findroot, transmission from the printed
# closed form, bound states from a high-precision transfer-matrix product.
SIGMA_1 = 3.9266023120479187782
SIGMA_2 = 7.0685827456287320886
SIGMA_3 = 10.210176122813030545
T_1 = 0.0031032148715542851
T_2 = 5.7995696040171168e-6
JUMP_1 = 0.00077700980045965449
ZETAS_15 = [5.8182709962677804, 10.009821766709368, 12.41347535873134, 13.903417383787695, 14.732683589964016]
ZETAS_4 = [0.25299527070106631, 3.358278165292612]


@pytest.fixture
def sigma_1():
    return SIGMA_1


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
