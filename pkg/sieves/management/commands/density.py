from sieves.management.base import SieveCommand
from sieves.util.density import partial_reports

HEADER = ['kind', 'k', 'n', 'empirical', 'theoretical', 'abs_error', 'ratio']


class Command(SieveCommand):
    help = ("Empirical densities of the k-prime PDF, its twin form and the ratio "
            "functional against their closed-form products.")
    required_options = ('n', 'k')

    def add_arguments(self, parser):
        parser.add_argument('--k', type=int, required=True, help="basis size, >= 1")
        parser.add_argument('--n', type=int, default=10 ** 6, help="largest n (default 10^6)")
        parser.add_argument('--sweep', action='store_true', help="report every basis size 1..k")
        parser.add_argument('--gap', type=int,
                            help="also report the density of pairs with this even gap")
        self.add_checkpoint_arguments(parser)
        super(Command, self).add_arguments(parser)

    def run(self, config, options):
        sizes = range(1, config.k + 1) if options.get('sweep') else [config.k]
        rows = []
        for k in sizes:
            reports = partial_reports(k, config.checkpoints, config.half_gap,
                                      config.segment_size, config.threads)
            rows.extend(report.row() for report in reports)
        return HEADER, rows
