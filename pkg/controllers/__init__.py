# Controllers package for the crepant index classifier
