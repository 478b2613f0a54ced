# Game values as a small algebra: build, canonicalize, name, compare.
from pawncgt import kernel as k
from pawncgt.expr import parse_value
from pawncgt.naming import describe, format_value

# {0,*|*} has a reversible option; its canonical form is up
g = k.make([k.ZERO, k.STAR], [k.STAR])
print(describe(g), "->", format_value(k.canonicalize(g)))

# numbers fall out of the simplicity rule
for text in ["{0,*|1}", "{0,*|1/2}", "{{2|1}|{1|0}}"]:
    print(f"{text:>16} = {format_value(parse_value(text))}")

# infinitesimals add like vectors
total = parse_value("^") + parse_value("2.v*")
print("^ + 2.v* =", format_value(total), "/", k.outcome(total).value)

# tiny-one sits below every positive number, yet above zero
t = parse_value("Tiny(1)")
print("0 < Tiny(1):", k.lt(k.ZERO, t), " Tiny(1) < 1/1024:", k.lt(t, parse_value("1/1024")))

# and a switch is hot: stops and temperature
s = parse_value("{3|-1}")
left, right = k.stops(s)
print(format_value(s), f"stops {left}, {right}", "temperature", k.switch_temperature(s))
