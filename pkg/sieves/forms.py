'''
Validation of management command options.

See https://docs.djangoproject.com/en/4.2/topics/forms/ for details.
'''

import os
from dataclasses import asdict, dataclass
from typing import Optional

from django import forms
from django.conf import settings

from sieves.util.report import FORMATS
from sieves.util.series import auto_checkpoints


@dataclass(frozen=True)
class RunConfig:
	'''
		Validated options of one command run.
	'''
	command: str
	n_max: Optional[int] = None
	k: Optional[int] = None
	half_gap: Optional[int] = None
	checkpoints: tuple = ()
	output_format: str = 'csv'
	output: Optional[str] = None
	segment_size: Optional[int] = None
	threads: int = 1

	@property
	def gap(self):
		return None if self.half_gap is None else 2 * self.half_gap

	def as_dict(self):
		data = asdict(self)
		data['checkpoints'] = list(self.checkpoints)
		return data


class RunConfigForm(forms.Form):
	'''
		Options shared by the sieve commands. Each command marks the fields it
		cannot do without through `required`.
	'''

	n = forms.IntegerField(required=False, min_value=2)
	k = forms.IntegerField(required=False, min_value=1)
	gap = forms.IntegerField(required=False, min_value=2)
	checkpoints = forms.CharField(required=False)
	auto = forms.BooleanField(required=False)
	format = forms.ChoiceField(required=False, choices=[(f, f) for f in FORMATS])
	output = forms.CharField(required=False)
	segment_size = forms.IntegerField(required=False, min_value=1)
	threads = forms.IntegerField(required=False, min_value=1)

	def __init__(self, *args, **kwargs):
		required = kwargs.pop('required', ())
		super(RunConfigForm, self).__init__(*args, **kwargs)
		for name in required:
			self.fields[name].required = True

	def clean_gap(self):
		'''
			Prime pairs beyond (2, 3) differ by even numbers.
		'''
		gap = self.cleaned_data.get('gap')
		if gap is not None and gap % 2:
			raise forms.ValidationError("gaps must be even, got %(gap)d", params={'gap': gap})
		return gap

	def clean_checkpoints(self):
		'''
			"20,100" -> [20, 100]; strictly increasing.
		'''
		raw = self.cleaned_data.get('checkpoints') or ''
		if not raw.strip():
			return []
		try:
			points = [int(item) for item in raw.split(',') if item.strip()]
		except ValueError:
			raise forms.ValidationError("checkpoints must be comma separated integers")

		if any(b <= a for a, b in zip(points, points[1:])):
			raise forms.ValidationError("checkpoints must be strictly increasing")
		return points

	def clean_threads(self):
		'''
			--threads, then PDFSIEVE_THREADS, then SIEVE_THREADS.
		'''
		threads = self.cleaned_data.get('threads')
		if threads is not None:
			return threads

		env = os.environ.get('PDFSIEVE_THREADS')
		if env:
			try:
				threads = int(env)
			except ValueError:
				raise forms.ValidationError("PDFSIEVE_THREADS must be an integer, got %(env)r", params={'env': env})
		else:
			threads = settings.SIEVE_THREADS
		if threads < 1:
			raise forms.ValidationError("thread count must be >= 1")
		return threads

	def clean(self):
		cleaned_data = super(RunConfigForm, self).clean()
		n = cleaned_data.get('n')
		points = cleaned_data.get('checkpoints') or []

		if n is not None:
			if any(point > n for point in points):
				self.add_error('checkpoints', "checkpoints must not exceed n=%d" % n)
			elif cleaned_data.get('auto') and not points:
				cleaned_data['checkpoints'] = auto_checkpoints(n)
			elif not points:
				cleaned_data['checkpoints'] = [n]
		if not cleaned_data.get('format'):
			cleaned_data['format'] = 'csv'
		return cleaned_data

	def errors_text(self):
		return '; '.join('%s: %s' % (name, ' '.join(message for error in errors for message in error.messages))
			for name, errors in self.errors.as_data().items())

	def to_config(self, command):
		data = self.cleaned_data
		return RunConfig(command=command, n_max=data.get('n'), k=data.get('k'),
			half_gap=data['gap'] // 2 if data.get('gap') else None,
			checkpoints=tuple(data.get('checkpoints') or ()), output_format=data['format'],
			output=data.get('output') or None, segment_size=data.get('segment_size'),
			threads=data['threads'])
