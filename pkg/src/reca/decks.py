"""Demonstration decks exercising the major language features.

Each deck is a list of 80-column card images.  They are used by the test
suite and the narrative scripts in demos/.
"""

# recursive factorial: defines 'R, then tabulates n and n! for n = 1..10
FACTORIAL = [
    "C FACTORIAL TABLE",
    "* N'R",
    "(N,0L'/1',P'/1'-'*RECURSION' 'R*,)'RL",
    "('/'S0L($10$F0'/1'&S0 O 'R O X.,),) L",
]

# x and sin(3x)*exp(-0.3x) for x = 0, 0.15, ..., 7.5 (51 rows)
DAMPED_OSCILLATION = [
    "C DAMPED OSCILLATIONS  Y = SIN(3X)*EXP(-0.3X)",
    "* ('/'S1L(F1OF1'/3'*'SF1'/-0.3'*E*OXF1'/0.15'&S1L$50$.,),)",
]

# pi by Simpson's rule on 4/(1+x*x) over [0,1], 40 panels
SIMPSON_PI = [
    "C PI BY SIMPSON INTEGRATION OF 4/(1&X*X) ON (0,1)",
    "* (F6PF1P*&/,)Y",
    "(IOIOXS1-IOXS3'/2'*/S4'/3'/S5L'/1'S6'/'(F3F6-S3N,LY&F1F4&S1LY'/4'*&F1F4&S1LY",
    "&X.,)LF5*,)'R",
    "('R'/4'*\"PI='OX,)",
    "'/1.0' '/0.0'",
    "'/40'",
]

# 50 x 74 character plot of the region where
# (x*x+y*y)**5 - (8*(x*x-y*y)*x*y)**2 is negative (an eight-petal rose)
ROSE_CURVE = [
    "C EIGHT PETAL ROSE",
    "* ('/-2'S0L($50$'/-2'S1L($74$F1P*F0P*&PPPP****F1P*F0P*-F1*F0*'/8'*P*-",
    "(N\"*',\" ',)LF1'/0.054'&S1L.,)XF0'/0.08'&S0L.,),)",
]
