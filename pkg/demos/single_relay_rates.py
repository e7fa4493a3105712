"""Walk through every bound on two contrasting single-relay channels.

First a relay-only channel (no direct link): the random listen/transmit
switch carries real information here, so the random-switch schemes pull
visibly ahead of their fixed-schedule versions.  Then a strong-direct-link
channel at 30 dB where the decode-and-forward family wins.

Run:  python demos/single_relay_rates.py
"""

from relaybounds import (
    ChannelGains,
    cutset_upper,
    cutset_upper_analytic,
    fd_cutset_s0,
    lda_rate,
    nnc_lower_det,
    nnc_lower_noQ,
    nnc_lower_random,
    pdf_lower,
    pdf_lower_analytic,
)


def show(name, rb, note=""):
    extras = []
    if rb.gamma is not None:
        extras.append(f"listen fraction {rb.gamma:.3f}")
    if rb.sigma2 is not None:
        extras.append(f"quantization noise {rb.sigma2:.3f}")
    print(f"  {name:<28s} {rb.value:7.4f} bits   {', '.join(extras)}  {note}")


def main():
    print("Relay-only channel: S=0, C=15, I=3 (all linear)")
    g = ChannelGains(S=0.0, I=3.0, C=15.0)
    show("cut-set (numeric)", cutset_upper(g), "<- upper bound")
    show("full-duplex capacity", fd_cutset_s0(g), "<- tighter upper bound here")
    show("decode-forward, random sw", pdf_lower(g, "random"))
    show("decode-forward, fixed sw", pdf_lower(g, "deterministic"))
    rb = nnc_lower_random(g)
    show("quantize-forward, random sw", rb)
    print(
        f"    schedule: listen/talk while source off = {rb.g00:.2f}/{rb.g01:.2f}, "
        f"while source on = {rb.g10:.2f}/{rb.g11:.2f}"
    )
    show("quantize-forward, fixed sw", nnc_lower_det(g))
    show("two-phase superposition", lda_rate(g))
    print()
    print("With a direct link at 30 dB: S=30dB, C=37.63dB, I=34.77dB")
    g = ChannelGains.from_db(30.0, 34.77, 37.63)
    show("cut-set (numeric)", cutset_upper(g), "<- upper bound")
    show("cut-set (closed form)", cutset_upper_analytic(g), "<- +2-bit slack")
    show("decode-forward, random sw", pdf_lower(g, "random"))
    show("decode-forward, fixed sw", pdf_lower(g, "deterministic"))
    show("decode-forward (closed form)", pdf_lower_analytic(g))
    show("quantize-forward, random sw", nnc_lower_random(g))
    show("quantize-forward, no share", nnc_lower_noQ(g), "<- matches random switch here")
    show("quantize-forward, fixed sw", nnc_lower_det(g))
    show("two-phase superposition", lda_rate(g))


if __name__ == "__main__":
    main()
