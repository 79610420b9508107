# Fibonacci and Lucas numbers, exact and via the Binet forms.
import circnorm as cn

print("n    F_n   L_n")
for n in range(10):
    print(f"{n:<4} {cn.fib(n):<5} {cn.lucas(n)}")

# Exact values are plain Python ints, so large indices are fine.
print("F_200 =", cn.fib(200))

# Every Lucas number is a sum of two Fibonacci numbers.
assert all(cn.lucas(n + 1) == cn.fib(n) + cn.fib(n + 2) for n in range(300))

# The Binet forms are floating point; they round correctly up to n = 70.
for n in (10, 40, 70):
    print(n, cn.binet_fib(n), cn.fib(n), cn.binet_lucas(n), cn.lucas(n))

try:
    cn.binet_fib(71)
except cn.BinetPrecisionError as exc:
    print("refused:", exc)
