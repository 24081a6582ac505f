"""Central binomial convolutions and their closed forms.

Three convolution identities over C(2j,j) C(2k-2j,k-j):

  * unweighted:            sum_j C(2j,j) C(2k-2j,k-j)            = 4^k
  * weighted by j(k-j):    sum_j C(2j,j) C(2k-2j,k-j) j(k-j)     = 4^k k(k-1)/8
  * weighted by the linear forms (6j+1)(6k-6j+1):
        sum_j C(2j,j) C(2k-2j,k-j) (6j+1)(6k-6j+1) = 4^k (9k^2/2 + 3k/2 + 1)

The third is a linear combination of the first two, since
(6j+1)(6k-6j+1) = (6k+1) + 36 j(k-j).  Everything below is exact integer
arithmetic; nothing is sampled or rounded.
"""

from qcong import inner_closed, inner_conv_sum, plain_conv_sum, weighted_conv_sum

print("k | plain = 4^k | weighted = 4^k k(k-1)/8 | (6j+1)-weighted = closed form")
print("--+-------------+-------------------------+------------------------------")
for k in range(9):
    plain = plain_conv_sum(k)
    weighted = weighted_conv_sum(k)
    inner = inner_conv_sum(k)
    assert plain == 4**k
    assert weighted == 4**k * k * (k - 1) // 8
    assert inner == inner_closed(k)
    print(f"{k} | {plain:11d} | {weighted:23d} | {inner} = {inner_closed(k)}")

print()
print("linear-combination structure at k = 6:")
k = 6
print(f"  (6k+1) * plain + 36 * weighted = {(6 * k + 1) * plain_conv_sum(k) + 36 * weighted_conv_sum(k)}")
print(f"  (6j+1)(6k-6j+1) convolution    = {inner_conv_sum(k)}")

N = 400
assert all(inner_conv_sum(k) == inner_closed(k) for k in range(N + 1))
print(f"\nchecked the closed form exactly for every k <= {N}: all equal")
