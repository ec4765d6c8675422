from django.conf import settings

from sieves.management.base import SieveCommand
from sieves.util.density import hl_series
from sieves.util.sieve import segmented_sieve


class Command(SieveCommand):
    help = ("Counts prime pairs (p, p + gap), p <= n, at each checkpoint next to "
            "the Hardy-Littlewood prediction 2 C S li2(n).")
    required_options = ('n',)

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help="upper bound for the lower member, >= 3")
        parser.add_argument('--gap', type=int, default=2, help="even pair gap (default 2, twins)")
        self.add_checkpoint_arguments(parser)
        parser.add_argument('--pmax', type=int,
                            help="prime ceiling of the twin constant product (default TWIN_CONSTANT_PMAX)")
        super(Command, self).add_arguments(parser)

    def run(self, config, options):
        top = config.checkpoints[-1]
        bitmap = segmented_sieve(top + config.gap, config.segment_size, config.threads)
        predictions = hl_series(config.checkpoints, config.half_gap, bitmap,
                                options.get('pmax') or settings.TWIN_CONSTANT_PMAX)

        header = ['n', 'actual', 'predicted', 'ratio', 'asymptotic']
        rows = [[p.n, p.actual, p.predicted, p.ratio, p.asymptotic] for p in predictions]
        return header, rows
