from django.conf import settings

from sieves.errors import ContractError
from sieves.management.base import SieveCommand
from sieves.util.density import brun_partial, brun_upper_bound, pnt_ratio, singular_series, twin_constant
from sieves.util.pairs import pi_twin
from sieves.util.sieve import segmented_sieve


class Command(SieveCommand):
    help = "Twin prime constant, singular series factors, Brun partial sums and the PNT ratio."

    def add_arguments(self, parser):
        parser.add_argument('--twin', action='store_true', help="twin prime constant partial product")
        parser.add_argument('--pmax', type=int, help="prime ceiling for --twin (default TWIN_CONSTANT_PMAX)")
        parser.add_argument('--singular', action='store_true', help="singular series factor of --gap")
        parser.add_argument('--gap', type=int, help="even pair gap for --singular")
        parser.add_argument('--brun', action='store_true',
                            help="Brun partial sum up to --n, with the twin count and its upper bound curve")
        parser.add_argument('--pnt', action='store_true', help="pi(n) ln(n) / n at --n")
        parser.add_argument('--n', type=int, help="upper bound for --brun and --pnt")
        super(Command, self).add_arguments(parser)

    def run(self, config, options):
        if not any(options.get(name) for name in ('twin', 'singular', 'brun', 'pnt')):
            raise ContractError("choose at least one of --twin, --singular, --brun, --pnt")

        rows = []
        c_twin = None
        if options.get('twin'):
            p_max = options.get('pmax') or settings.TWIN_CONSTANT_PMAX
            c_twin = twin_constant(p_max)
            rows.append(['twin', p_max, c_twin])

        if options.get('singular'):
            if config.half_gap is None:
                raise ContractError("--singular needs --gap")
            rows.append(['singular', config.gap, singular_series(config.half_gap)])

        if options.get('brun') or options.get('pnt'):
            if config.n_max is None:
                raise ContractError("--brun and --pnt need --n")
            n = config.n_max
            bitmap = segmented_sieve(n + 2, config.segment_size, config.threads)
            if options.get('brun'):
                rows.append(['brun', n, brun_partial(n, bitmap)])
                rows.append(['pi_twin', n, pi_twin(n, bitmap)])
                rows.append(['brun_bound', n, brun_upper_bound(n, c_twin)])
            if options.get('pnt'):
                rows.append(['pnt', n, pnt_ratio(n, bitmap)])

        return ['constant', 'parameter', 'value'], rows
